#pragma once

#include "tamefiber/arith.hpp"
#include "tamefiber/error.hpp"

#include <cctype>
#include <string>
#include <string_view>

namespace tamefiber {

enum class KodairaKind { I, II, III, IV, Istar, IVstar, IIIstar, IIstar };

/// Reduction type from the Kodaira-Neron table; n is used by I_n and I_n^*.
struct KodairaType {
    KodairaKind kind = KodairaKind::I;
    Int n = 0;

    [[nodiscard]] bool has_parameter() const noexcept {
        return kind == KodairaKind::I || kind == KodairaKind::Istar;
    }

    friend bool operator==(const KodairaType& x, const KodairaType& y) noexcept {
        return x.kind == y.kind && (!x.has_parameter() || x.n == y.n);
    }
};

/// "I0", "I3", "II", "IV*", "I2*" ...
inline std::string to_string(const KodairaType& t) {
    switch (t.kind) {
    case KodairaKind::I: return "I" + std::to_string(t.n);
    case KodairaKind::II: return "II";
    case KodairaKind::III: return "III";
    case KodairaKind::IV: return "IV";
    case KodairaKind::Istar: return "I" + std::to_string(t.n) + "*";
    case KodairaKind::IVstar: return "IV*";
    case KodairaKind::IIIstar: return "III*";
    case KodairaKind::IIstar: return "II*";
    }
    return "?";
}

/// Accepts "I3", "I_3", "I3*", "I_0*", "II", "IV*", "IVstar", "Istar" (with
/// `default_n`), and "I" (with `default_n`).
inline KodairaType parse_kodaira_type(std::string_view text, Int default_n = 0) {
    std::string s(text);
    bool star = false;
    if (s.size() >= 4 && s.compare(s.size() - 4, 4, "star") == 0) {
        star = true;
        s.resize(s.size() - 4);
    } else if (!s.empty() && s.back() == '*') {
        star = true;
        s.pop_back();
    }
    std::string roman;
    std::size_t k = 0;
    while (k < s.size() && (s[k] == 'I' || s[k] == 'V')) roman += s[k++];
    if (k < s.size() && s[k] == '_') ++k;
    std::string digits = s.substr(k);
    for (char c : digits)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            fail(ErrorKind::InvalidParameter, "unrecognised Kodaira type '" + std::string(text) + "'");

    KodairaType t;
    if (roman == "I") {
        t.kind = star ? KodairaKind::Istar : KodairaKind::I;
        t.n = digits.empty() ? default_n : std::stoll(digits);
        if (t.n < 0) fail(ErrorKind::InvalidParameter, "Kodaira parameter n must be >= 0");
        return t;
    }
    if (!digits.empty())
        fail(ErrorKind::InvalidParameter, "type '" + std::string(text) + "' takes no parameter");
    if (roman == "II") t.kind = star ? KodairaKind::IIstar : KodairaKind::II;
    else if (roman == "III") t.kind = star ? KodairaKind::IIIstar : KodairaKind::III;
    else if (roman == "IV") t.kind = star ? KodairaKind::IVstar : KodairaKind::IV;
    else fail(ErrorKind::InvalidParameter, "unrecognised Kodaira type '" + std::string(text) + "'");
    return t;
}

} // namespace tamefiber
