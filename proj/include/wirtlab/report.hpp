#pragma once

#include <string>

namespace wirtlab {

enum class Verdict { Pass, Fail, Equality };

const char* to_string(Verdict v);

/// One named inequality instance lhs <= rhs. slack = rhs - lhs; the verdict
/// is Fail when slack < -atol, Equality when |slack| <= atol, Pass otherwise.
struct InequalityReport {
    std::string name;
    double lhs = 0.0;
    double rhs = 0.0;
    double slack = 0.0;
    Verdict verdict = Verdict::Pass;
    double rtol = 0.0;
    double atol = 0.0;
    std::string provenance;

    static InequalityReport make(std::string name, double lhs, double rhs, double atol,
                                 double rtol, std::string provenance);

    bool failed() const { return verdict == Verdict::Fail; }
};

} // namespace wirtlab
