#include "qbracket/report.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "qbracket/complex_io.hpp"

namespace qbracket {

void TransformReport::add(Point p) {
    const double r = std::isnan(p.residual) ? INFINITY : p.residual;
    max_residual = std::max(max_residual, r);
    pass = pass && r < tol;
    points.push_back(std::move(p));
}

nlohmann::json to_json(const VerificationReport& r) {
    nlohmann::json j;
    j["identity"] = r.identity;
    j["params"] = r.params;
    j["order"] = r.order;
    j["coefficients_checked"] = r.coefficients_checked;
    j["pass"] = r.pass;
    if (r.first_discrepancy) {
        j["first_discrepancy"] = {{"q_power", r.first_discrepancy->q_power},
                                  {"lhs", r.first_discrepancy->lhs},
                                  {"rhs", r.first_discrepancy->rhs}};
    } else {
        j["first_discrepancy"] = nullptr;
    }
    if (!r.notes.empty()) j["notes"] = r.notes;
    return j;
}

nlohmann::json to_json(const TransformReport& r) {
    nlohmann::json pts = nlohmann::json::array();
    for (const auto& p : r.points) {
        nlohmann::json e{{"z", format_complex(p.z, 17)},
                         {"lhs", format_complex(p.lhs, 17)},
                         {"rhs", format_complex(p.rhs, 17)},
                         {"residual", p.residual}};
        if (!p.detail.empty()) e["detail"] = p.detail;
        pts.push_back(std::move(e));
    }
    return {{"identity", r.identity}, {"params", r.params},       {"points", pts},
            {"tol", r.tol},           {"max_residual", r.max_residual}, {"pass", r.pass}};
}

std::string to_text(const VerificationReport& r) {
    std::ostringstream os;
    os << r.identity << ' ' << r.params.dump() << ": " << (r.pass ? "PASS" : "FAIL") << " ("
       << r.coefficients_checked << " coefficients to q^" << r.order << ")\n";
    if (r.first_discrepancy) {
        os << "  first discrepancy at q^" << r.first_discrepancy->q_power << ": lhs " << r.first_discrepancy->lhs
           << " vs rhs " << r.first_discrepancy->rhs << '\n';
    }
    for (const auto& n : r.notes) os << "  note: " << n << '\n';
    return os.str();
}

std::string to_text(const TransformReport& r) {
    std::ostringstream os;
    os << r.identity << ' ' << r.params.dump() << ": " << (r.pass ? "PASS" : "FAIL")
       << " (max residual " << format_real(r.max_residual, 3) << ", tol " << format_real(r.tol, 3) << ")\n";
    for (const auto& p : r.points) {
        os << "  z=" << format_complex(p.z) << "  lhs=" << format_complex(p.lhs) << "  rhs=" << format_complex(p.rhs)
           << "  residual=" << format_real(p.residual, 3) << '\n';
    }
    return os.str();
}

}  // namespace qbracket
