#pragma once

#include <string>

#include <json.hpp>

#include "spectra/rational.hpp"

namespace spectra {

/// Rationals serialize as [num, den] everywhere.
inline nlohmann::ordered_json rational_json(const Rational& r) {
    return nlohmann::ordered_json::array({r.num(), r.den()});
}

enum class Verdict { Pass, Fail, Inconclusive };

inline const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "pass";
        case Verdict::Fail: return "fail";
        case Verdict::Inconclusive: return "inconclusive";
    }
    return "inconclusive";
}

/// Outcome of one verification run. A fail always carries a witness (the
/// violating pair or point); a pass carries the error budget actually
/// achieved. ordered_json keeps reruns byte-identical.
struct VerificationReport {
    std::string condition;
    Verdict verdict = Verdict::Inconclusive;
    nlohmann::ordered_json witness;     // violating pair, point, or matched data
    nlohmann::ordered_json parameters;  // grid, truncation radius, tolerances, tail constant
    nlohmann::ordered_json details;     // extra per-condition data (achieved budgets etc.)

    bool passed() const { return verdict == Verdict::Pass; }

    nlohmann::ordered_json to_json() const {
        nlohmann::ordered_json j;
        j["condition"] = condition;
        j["verdict"] = to_string(verdict);
        j["witness"] = witness;
        j["parameters"] = parameters;
        j["details"] = details;
        return j;
    }
};

}  // namespace spectra
