#ifndef QBRACKET_REPORT_HPP
#define QBRACKET_REPORT_HPP

#include <complex>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace qbracket {

// Outcome of an exact coefficient-by-coefficient identity check. Failure is a
// report outcome, never an exception.
struct VerificationReport {
    struct Discrepancy {
        std::size_t q_power = 0;
        std::string lhs;
        std::string rhs;
    };

    std::string identity;
    nlohmann::json params = nlohmann::json::object();
    std::size_t order = 0;
    std::size_t coefficients_checked = 0;
    bool pass = true;
    std::optional<Discrepancy> first_discrepancy;
    std::vector<std::string> notes;
};

// Outcome of a numerical transformation-law check at a set of points.
// Residuals are recorded even when the check passes.
struct TransformReport {
    struct Point {
        std::complex<double> z;
        std::complex<double> lhs;
        std::complex<double> rhs;
        double residual = 0;
        nlohmann::json detail = nlohmann::json::object();
    };

    std::string identity;
    nlohmann::json params = nlohmann::json::object();
    std::vector<Point> points;
    double tol = 0;
    double max_residual = 0;
    bool pass = true;

    // Appends a point and updates max_residual/pass.
    void add(Point p);
};

nlohmann::json to_json(const VerificationReport& r);
nlohmann::json to_json(const TransformReport& r);

std::string to_text(const VerificationReport& r);
std::string to_text(const TransformReport& r);

}  // namespace qbracket

#endif
