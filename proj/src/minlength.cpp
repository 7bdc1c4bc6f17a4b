#include "minlen/minlength.hpp"

#include "minlen/errors.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string_view>

namespace minlen::minlength {

namespace {

const double kLn4 = std::log(4.0);

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

double require_key(const std::map<std::string, double>& kv, const std::string& key) {
    const auto it = kv.find(key);
    if (it == kv.end()) {
        throw IoError("dataset is missing key '" + key + "'");
    }
    return it->second;
}

void reject_unknown(const std::map<std::string, double>& kv, const std::set<std::string>& allowed,
                    const char* what) {
    for (const auto& [key, value] : kv) {
        if (!allowed.contains(key)) {
            throw IoError(std::string(what) + ": unknown key '" + key + "'");
        }
    }
}

}  // namespace

void LambShiftDataset::validate() const {
    for (const auto* m : {&l1s_khz, &l2s_khz, &delta2_theor_khz}) {
        if (!(m->value > 0.0) || !std::isfinite(m->value)) {
            throw DomainError("Lamb-shift dataset: central values must be positive");
        }
        if (!(m->uncertainty >= 0.0) || !std::isfinite(m->uncertainty)) {
            throw DomainError("Lamb-shift dataset: uncertainties must be non-negative");
        }
    }
}

LambShiftDataset LambShiftDataset::bundled() {
    return {{8172840.0, 22.0}, {1045009.4, 6.5}, {187225.70, 0.05}};
}

void PhysicalConstants::validate() const {
    if (!(bohr_radius_m > 0.0) || !(coulomb_unit_hz > 0.0) || !std::isfinite(bohr_radius_m) ||
        !std::isfinite(coulomb_unit_hz)) {
        throw DomainError("physical constants must be positive and finite");
    }
}

EtaXi::EtaXi(double eta, double xi) : eta_(eta), xi_(xi) {
    if (!(eta >= kEtaMin && eta <= kEtaMax)) {
        throw DomainError("eta must lie in [1/3, 1], got " + std::to_string(eta));
    }
    if (!(xi >= 0.0) || !std::isfinite(xi)) {
        throw DomainError("xi must be non-negative, got " + std::to_string(xi));
    }
}

DeformationParams EtaXi::to_params() const {
    const double xi2 = xi_ * xi_;
    return {eta_ * xi2, (1.0 - eta_) * xi2};
}

Measured delta2_exprt(const LambShiftDataset& data) {
    const double u1 = data.l1s_khz.uncertainty;
    const double u2 = 8.0 * data.l2s_khz.uncertainty;
    return {8.0 * data.l2s_khz.value - data.l1s_khz.value, std::hypot(u2, u1)};
}

Budget discrepancy(const LambShiftDataset& data) {
    const Measured exprt = delta2_exprt(data);
    Budget b;
    b.khz.value = exprt.value - data.delta2_theor_khz.value;
    b.khz.uncertainty = std::hypot(exprt.uncertainty, data.delta2_theor_khz.uncertainty);
    b.vacuous = b.khz.value < 0.0;
    return b;
}

double eta_denominator(double eta) { return 1.0 - (3.0 * eta - 1.0) * (3.0 - 2.0 * kLn4); }

void check_eta_domain() {
    // Linear in eta, so the endpoints bound it.
    if (!(eta_denominator(kEtaMin) > 0.0 && eta_denominator(kEtaMax) > 0.0)) {
        throw std::logic_error("minimal-length denominator is not positive on [1/3, 1]");
    }
}

double ceu_to_khz(double energy_ceu, const PhysicalConstants& constants) {
    return energy_ceu * constants.coulomb_unit_hz * 1e-3;
}

double khz_to_ceu(double khz, const PhysicalConstants& constants) {
    return khz * 1e3 / constants.coulomb_unit_hz;
}

double min_length_xi(double eta, double budget_khz, const PhysicalConstants& constants) {
    if (!(eta >= kEtaMin && eta <= kEtaMax)) {
        throw DomainError("eta must lie in [1/3, 1], got " + std::to_string(eta));
    }
    if (!(budget_khz >= 0.0) || !std::isfinite(budget_khz)) {
        throw DomainError("budget must be non-negative, got " + std::to_string(budget_khz));
    }
    constants.validate();
    const double budget = khz_to_ceu(budget_khz, constants);
    return std::sqrt(2.0 * budget / eta_denominator(eta));
}

double min_length(double eta, double budget_khz, const PhysicalConstants& constants) {
    return min_length_xi(eta, budget_khz, constants) * constants.bohr_radius_m;
}

std::vector<SweepRow> sweep(const LambShiftDataset& data, const PhysicalConstants& constants,
                            int points) {
    if (points < 2) {
        throw DomainError("sweep needs at least 2 points, got " + std::to_string(points));
    }
    data.validate();
    constants.validate();
    const Budget budget = discrepancy(data);
    std::vector<SweepRow> rows;
    rows.reserve(static_cast<std::size_t>(points));
    for (int i = 0; i < points; ++i) {
        SweepRow row;
        // Pin the endpoints exactly rather than relying on the step arithmetic.
        row.eta = i == 0            ? kEtaMin
                  : i == points - 1 ? kEtaMax
                                    : kEtaMin + (kEtaMax - kEtaMin) * i / (points - 1);
        row.vacuous = budget.vacuous;
        if (!budget.vacuous) {
            row.xi = min_length_xi(row.eta, budget.khz.value, constants);
        }
        row.delta_x_min_m = row.xi * constants.bohr_radius_m;
        rows.push_back(row);
    }
    return rows;
}

ConsistencyReport consistency_check(const DeformationParams& params, const LambShiftDataset& data,
                                    const PhysicalConstants& constants) {
    using hydrogen::SLevel;
    const double e1 = perturbation::correction_ns(SLevel(1), params).total;
    const double e2 = perturbation::correction_ns(SLevel(2), params).total;

    ConsistencyReport r;
    r.from_corrections_khz = ceu_to_khz(8.0 * e2 - e1, constants);
    r.closed_form_khz = ceu_to_khz(perturbation::delta2_ml(params), constants);
    r.budget_khz = discrepancy(data).khz.value;
    const auto rel = [](double a, double b) {
        if (a == b) {
            return 0.0;
        }
        return std::abs(a - b) / std::abs(b);
    };
    r.rel_dev_closed = rel(r.from_corrections_khz, r.closed_form_khz);
    r.rel_dev_budget = rel(r.from_corrections_khz, r.budget_khz);
    return r;
}

std::map<std::string, double> parse_key_values(const std::string& text, const std::string& origin) {
    std::map<std::string, double> kv;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string_view view = line;
        if (const auto hash = view.find('#'); hash != std::string_view::npos) {
            view = view.substr(0, hash);
        }
        view = trim(view);
        if (view.empty()) {
            continue;
        }
        const auto eq = view.find('=');
        const auto where = origin + ":" + std::to_string(lineno);
        if (eq == std::string_view::npos) {
            throw IoError(where + ": expected 'key = value'");
        }
        const std::string key(trim(view.substr(0, eq)));
        const std::string_view raw = trim(view.substr(eq + 1));
        if (key.empty()) {
            throw IoError(where + ": empty key");
        }
        double value = 0.0;
        const auto [ptr, ec] = std::from_chars(raw.data(), raw.data() + raw.size(), value);
        if (ec != std::errc() || ptr != raw.data() + raw.size()) {
            throw IoError(where + ": '" + std::string(raw) + "' is not a number");
        }
        if (!kv.emplace(key, value).second) {
            throw IoError(where + ": duplicate key '" + key + "'");
        }
    }
    return kv;
}

std::map<std::string, double> read_key_values(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open '" + path.string() + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_key_values(buffer.str(), path.string());
}

LambShiftDataset dataset_from_key_values(const std::map<std::string, double>& kv) {
    reject_unknown(kv,
                   {"l1s_khz", "l1s_unc_khz", "l2s_khz", "l2s_unc_khz", "delta2_theor_khz",
                    "delta2_theor_unc_khz"},
                   "dataset");
    LambShiftDataset d;
    d.l1s_khz = {require_key(kv, "l1s_khz"), require_key(kv, "l1s_unc_khz")};
    d.l2s_khz = {require_key(kv, "l2s_khz"), require_key(kv, "l2s_unc_khz")};
    d.delta2_theor_khz = {require_key(kv, "delta2_theor_khz"),
                          require_key(kv, "delta2_theor_unc_khz")};
    try {
        d.validate();
    } catch (const DomainError& e) {
        throw IoError(e.what());
    }
    return d;
}

LambShiftDataset load_dataset(const std::filesystem::path& path) {
    return dataset_from_key_values(read_key_values(path));
}

PhysicalConstants constants_from_key_values(const std::map<std::string, double>& kv) {
    reject_unknown(kv, {"bohr_radius_m", "coulomb_unit_hz"}, "constants");
    PhysicalConstants c;
    if (const auto it = kv.find("bohr_radius_m"); it != kv.end()) {
        c.bohr_radius_m = it->second;
    }
    if (const auto it = kv.find("coulomb_unit_hz"); it != kv.end()) {
        c.coulomb_unit_hz = it->second;
    }
    try {
        c.validate();
    } catch (const DomainError& e) {
        throw IoError(e.what());
    }
    return c;
}

PhysicalConstants load_constants(const std::filesystem::path& path) {
    return constants_from_key_values(read_key_values(path));
}

}  // namespace minlen::minlength
