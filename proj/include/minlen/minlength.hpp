#pragma once

// Lamb-shift data -> upper bound on the minimal length.

#include "minlen/perturbation.hpp"

#include <filesystem>
#include <map>
#include <string>
#include <vector>

namespace minlen::minlength {

using perturbation::DeformationParams;

/// A value with a one-sigma uncertainty.
struct Measured {
    double value = 0.0;
    double uncertainty = 0.0;
};

/// Lamb shifts L(1s), L(2s) and the theoretical 8 L(2s) - L(1s), all in kHz.
struct LambShiftDataset {
    Measured l1s_khz;
    Measured l2s_khz;
    Measured delta2_theor_khz;

    /// Throws DomainError unless central values are positive and
    /// uncertainties are non-negative.
    void validate() const;

    /// Values bundled with the project: Lamb shifts from precision hydrogen
    /// spectroscopy and the matching theoretical difference.
    static LambShiftDataset bundled();
};

struct PhysicalConstants {
    double bohr_radius_m = 5.29177210903e-11;
    /// Frequency equivalent of e^2/a (= 2 c R_inf).
    double coulomb_unit_hz = 6.579683920502e15;

    void validate() const;
};

/// Dimensionless minimal length xi = dx_min / a and mixing eta = beta / (beta + beta').
class EtaXi {
public:
    /// Requires 1/3 <= eta <= 1 and xi >= 0.
    EtaXi(double eta, double xi);

    double eta() const noexcept { return eta_; }
    double xi() const noexcept { return xi_; }

    /// beta_t = eta xi^2, beta_prime_t = (1 - eta) xi^2.
    DeformationParams to_params() const;

private:
    double eta_;
    double xi_;
};

inline constexpr double kEtaMin = 1.0 / 3.0;
inline constexpr double kEtaMax = 1.0;

/// 8 L(2s) - L(1s) in kHz with the uncorrelated uncertainty sqrt((8 u2)^2 + u1^2).
Measured delta2_exprt(const LambShiftDataset& data);

struct Budget {
    Measured khz;
    /// Theory above experiment: no deformation fits, the bound is vacuous.
    bool vacuous = false;
};

/// Experimental minus theoretical difference, the room left for a deformation shift.
Budget discrepancy(const LambShiftDataset& data);

/// 1 - (3 eta - 1)(3 - 2 ln 4); equals 1 at eta = 1/3 and 0.545177... at eta = 1.
double eta_denominator(double eta);

/// Checks that eta_denominator stays positive over [1/3, 1]; throws std::logic_error otherwise.
void check_eta_domain();

/// Dimensionless bound xi = sqrt(2 B / (1 - (3 eta - 1)(3 - 2 ln 4))), B in e^2/a.
double min_length_xi(double eta, double budget_khz, const PhysicalConstants& constants);

/// Bound on the minimal length in meters, xi * a.
double min_length(double eta, double budget_khz, const PhysicalConstants& constants);

struct SweepRow {
    double eta = 0.0;
    double xi = 0.0;
    double delta_x_min_m = 0.0;
    bool vacuous = false;
};

/// Uniform eta grid over [1/3, 1], both endpoints included. With a negative
/// budget every row carries xi = 0 and the vacuous flag.
std::vector<SweepRow> sweep(const LambShiftDataset& data, const PhysicalConstants& constants,
                            int points);

struct ConsistencyReport {
    double from_corrections_khz = 0.0;  // 8 dE(2s) - dE(1s) from correction_ns
    double closed_form_khz = 0.0;       // delta2_ml
    double budget_khz = 0.0;            // discrepancy(data)
    double rel_dev_closed = 0.0;        // |corrections - closed| / |closed|
    double rel_dev_budget = 0.0;        // |corrections - budget| / |budget|
};

ConsistencyReport consistency_check(const DeformationParams& params, const LambShiftDataset& data,
                                    const PhysicalConstants& constants);

double ceu_to_khz(double energy_ceu, const PhysicalConstants& constants);
double khz_to_ceu(double khz, const PhysicalConstants& constants);

/// Flat "key = value" documents; '#' starts a comment. Throws IoError on
/// unreadable files, malformed lines or duplicate keys.
std::map<std::string, double> parse_key_values(const std::string& text, const std::string& origin);
std::map<std::string, double> read_key_values(const std::filesystem::path& path);

/// Requires all six keys: l1s_khz, l1s_unc_khz, l2s_khz, l2s_unc_khz,
/// delta2_theor_khz, delta2_theor_unc_khz.
LambShiftDataset dataset_from_key_values(const std::map<std::string, double>& kv);
LambShiftDataset load_dataset(const std::filesystem::path& path);

/// Keys bohr_radius_m and coulomb_unit_hz, each optional (defaults otherwise).
PhysicalConstants constants_from_key_values(const std::map<std::string, double>& kv);
PhysicalConstants load_constants(const std::filesystem::path& path);

}  // namespace minlen::minlength
