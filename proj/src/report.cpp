#include "wirtlab/report.hpp"

#include <cmath>
#include <utility>

namespace wirtlab {

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "pass";
        case Verdict::Fail: return "fail";
        case Verdict::Equality: return "equality";
    }
    return "unknown";
}

InequalityReport InequalityReport::make(std::string name, double lhs, double rhs, double atol,
                                        double rtol, std::string provenance) {
    InequalityReport r;
    r.name = std::move(name);
    r.provenance = std::move(provenance);
    r.lhs = lhs;
    r.rhs = rhs;
    r.slack = rhs - lhs;
    r.rtol = rtol;
    r.atol = atol;
    if (r.slack < -atol)
        r.verdict = Verdict::Fail;
    else if (std::abs(r.slack) <= atol)
        r.verdict = Verdict::Equality;
    else
        r.verdict = Verdict::Pass;
    return r;
}

} // namespace wirtlab
