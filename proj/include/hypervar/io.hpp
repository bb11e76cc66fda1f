#ifndef HYPERVAR_IO_HPP
#define HYPERVAR_IO_HPP

#include <cstdint>
#include <iomanip>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "hypervar/field.hpp"
#include "hypervar/module.hpp"
#include "hypervar/varieties.hpp"

namespace hypervar {

using json = nlohmann::ordered_json;

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Field <-> JSON

inline json field_to_json(const Field& F) {
    json j;
    j["p"] = F.characteristic();
    j["ext_degree"] = F.degree();
    if (F.degree() > 1) j["ext_poly"] = F.modulus();
    return j;
}

inline FieldPtr field_from_json(const json& j) {
    if (!j.is_object()) throw IoError("field: expected an object");
    if (!j.contains("p") || !j["p"].is_number_unsigned())
        throw IoError("field: missing or invalid \"p\"");
    std::uint32_t p = j["p"].get<std::uint32_t>();
    std::uint32_t e = 1;
    if (j.contains("ext_degree")) {
        if (!j["ext_degree"].is_number_unsigned())
            throw IoError("field: invalid \"ext_degree\"");
        e = j["ext_degree"].get<std::uint32_t>();
    }
    try {
        if (e == 1) return Field::prime(p);
        if (j.contains("ext_poly")) {
            auto poly = j["ext_poly"].get<std::vector<std::uint32_t>>();
            return Field::extension(p, e, poly);
        }
        return Field::extension(p, e);
    } catch (const std::exception& ex) {
        throw IoError(std::string("field: ") + ex.what());
    }
}

// ---------------------------------------------------------------------------
// Matrix entries: plain integers over a prime field, low-to-high digit
// arrays over an extension field.

inline json felem_to_json(const Field& F, felem v) {
    if (F.degree() == 1) return v;
    return json(F.digits(v));
}

inline felem felem_from_json(const Field& F, const json& j, const std::string& where) {
    if (j.is_number_unsigned() || j.is_number_integer()) {
        long long v = j.get<long long>();
        if (F.degree() != 1) {
            // accept small integers (images of the prime subfield)
            long long red = v % static_cast<long long>(F.characteristic());
            if (red < 0) red += F.characteristic();
            return F.from_digits({static_cast<std::uint32_t>(red)});
        }
        long long red = v % static_cast<long long>(F.order());
        if (red < 0) red += static_cast<long long>(F.order());
        return static_cast<felem>(red);
    }
    if (j.is_array()) {
        if (F.degree() == 1)
            throw IoError(where + ": array entry over a prime field");
        std::vector<std::uint32_t> digits;
        for (const auto& d : j) {
            if (!d.is_number_unsigned()) throw IoError(where + ": invalid digit");
            digits.push_back(d.get<std::uint32_t>() % F.characteristic());
        }
        if (digits.size() > F.degree()) throw IoError(where + ": too many digits");
        return F.from_digits(digits);
    }
    throw IoError(where + ": entry must be an integer or a digit array");
}

inline json matrix_to_json(const Matrix& M) {
    json rows = json::array();
    for (std::size_t i = 0; i < M.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < M.cols(); ++j)
            row.push_back(felem_to_json(*M.field(), M.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline Matrix matrix_from_json(const FieldPtr& F, const json& j, std::size_t n,
                               const std::string& where) {
    if (!j.is_array() || j.size() != n)
        throw IoError(where + ": expected " + std::to_string(n) + " rows");
    Matrix M(F, n, n);
    for (std::size_t i = 0; i < n; ++i) {
        if (!j[i].is_array() || j[i].size() != n)
            throw IoError(where + " row " + std::to_string(i) + ": expected " +
                          std::to_string(n) + " entries");
        for (std::size_t c = 0; c < n; ++c)
            M.at(i, c) = felem_from_json(*F, j[i][c],
                                         where + " entry (" + std::to_string(i) + "," +
                                             std::to_string(c) + ")");
    }
    return M;
}

// ---------------------------------------------------------------------------
// Module <-> JSON

inline json module_to_json(const ModuleRep& M) {
    json j;
    j["field"] = field_to_json(*M.ring.field);
    j["num_vars"] = M.ring.d;
    j["num_relations"] = M.ring.c;
    j["exponents"] = M.ring.u;
    j["dim"] = M.m;
    json ops = json::array();
    for (const auto& T : M.ops) ops.push_back(matrix_to_json(T));
    j["operators"] = std::move(ops);
    return j;
}

inline ModuleRep module_from_json(const json& j) {
    if (!j.is_object()) throw IoError("module: expected a JSON object");
    for (const char* key : {"field", "num_vars", "num_relations", "exponents", "dim", "operators"})
        if (!j.contains(key)) throw IoError(std::string("module: missing \"") + key + "\"");
    FieldPtr F = field_from_json(j["field"]);
    if (!j["num_vars"].is_number_unsigned()) throw IoError("module: invalid \"num_vars\"");
    if (!j["num_relations"].is_number_unsigned())
        throw IoError("module: invalid \"num_relations\"");
    if (!j["dim"].is_number_unsigned()) throw IoError("module: invalid \"dim\"");
    std::size_t d = j["num_vars"].get<std::size_t>();
    std::size_t c = j["num_relations"].get<std::size_t>();
    std::size_t m = j["dim"].get<std::size_t>();
    std::vector<std::uint32_t> u;
    if (!j["exponents"].is_array()) throw IoError("module: invalid \"exponents\"");
    for (const auto& e : j["exponents"]) {
        if (!e.is_number_unsigned()) throw IoError("module: invalid exponent");
        u.push_back(e.get<std::uint32_t>());
    }
    ModuleRep M;
    try {
        M.ring = RingSpec(F, d, c, std::move(u));
    } catch (const std::exception& ex) {
        throw IoError(std::string("module: ") + ex.what());
    }
    M.m = m;
    if (!j["operators"].is_array() || j["operators"].size() != d)
        throw IoError("module: expected " + std::to_string(d) + " operators");
    for (std::size_t i = 0; i < d; ++i)
        M.ops.push_back(matrix_from_json(F, j["operators"][i], m,
                                         "operator " + std::to_string(i + 1)));
    return M;
}

inline std::string module_to_string(const ModuleRep& M) { return module_to_json(M).dump(2) + "\n"; }

inline ModuleRep module_from_string(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const std::exception& ex) {
        throw IoError(std::string("module: JSON parse error: ") + ex.what());
    }
    return module_from_json(j);
}

// ---------------------------------------------------------------------------
// Report emission

enum class OutputFormat { json_fmt, csv, table };

inline OutputFormat parse_format(const std::string& s) {
    if (s == "json") return OutputFormat::json_fmt;
    if (s == "csv") return OutputFormat::csv;
    if (s == "table") return OutputFormat::table;
    throw IoError("unknown format: " + s);
}

// Coordinates print as packed integer codes (the same encoding the CLI
// accepts for --point), so output points can be fed straight back in.
inline std::string point_to_string(const Field& F, const std::vector<felem>& a) {
    (void)F;
    std::string s;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (i) s += ";";
        s += std::to_string(a[i]);
    }
    return s;
}

inline json point_to_json(const Field& F, const std::vector<felem>& a) {
    json arr = json::array();
    for (felem v : a) arr.push_back(felem_to_json(F, v));
    return arr;
}

inline std::string support_report_json(const ModuleRep& M, const SupportReport& rep) {
    const Field& F = *M.ring.field;
    json j;
    j["schema"] = 1;
    j["kind"] = "support";
    j["field_order"] = rep.field_order;
    j["member_count"] = rep.member_count;
    j["methods_agree"] = rep.methods_agree;
    json pts = json::array();
    for (const auto& ev : rep.points) {
        json pj;
        pj["point"] = point_to_json(F, ev.point);
        pj["member"] = ev.member;
        pj["beta_d"] = ev.beta_d;
        pj["beta_d1"] = ev.beta_d1;
        pj["rankC"] = ev.rank_c;
        pj["r"] = ev.r;
        pts.push_back(std::move(pj));
    }
    j["points"] = std::move(pts);
    return j.dump(2) + "\n";
}

inline std::string support_report_csv(const ModuleRep& M, const SupportReport& rep) {
    const Field& F = *M.ring.field;
    std::string out = "point,member,beta_d,beta_d1,rankC,r\n";
    for (const auto& ev : rep.points) {
        out += point_to_string(F, ev.point);
        out += ",";
        out += ev.member ? "1" : "0";
        out += "," + std::to_string(ev.beta_d) + "," + std::to_string(ev.beta_d1) + "," +
               std::to_string(ev.rank_c) + "," + std::to_string(ev.r) + "\n";
    }
    return out;
}

inline std::string support_report_table(const ModuleRep& M, const SupportReport& rep) {
    const Field& F = *M.ring.field;
    std::vector<std::vector<std::string>> rows;
    rows.push_back({"point", "member", "beta_d", "beta_d1", "rankC", "r"});
    for (const auto& ev : rep.points)
        rows.push_back({point_to_string(F, ev.point), ev.member ? "yes" : "no",
                        std::to_string(ev.beta_d), std::to_string(ev.beta_d1),
                        std::to_string(ev.rank_c), std::to_string(ev.r)});
    std::vector<std::size_t> width(rows[0].size(), 0);
    for (const auto& r : rows)
        for (std::size_t i = 0; i < r.size(); ++i) width[i] = std::max(width[i], r[i].size());
    std::ostringstream os;
    for (const auto& r : rows) {
        for (std::size_t i = 0; i < r.size(); ++i)
            os << std::left << std::setw(static_cast<int>(width[i]) + 2) << r[i];
        os << "\n";
    }
    return os.str();
}

inline std::string support_report_render(const ModuleRep& M, const SupportReport& rep,
                                         OutputFormat fmt) {
    switch (fmt) {
        case OutputFormat::json_fmt: return support_report_json(M, rep);
        case OutputFormat::csv: return support_report_csv(M, rep);
        case OutputFormat::table: return support_report_table(M, rep);
    }
    return {};
}

inline std::string rank_report_json(const ModuleRep& M, const RankReport& rep) {
    const Field& F = *M.ring.field;
    json j;
    j["schema"] = 1;
    j["kind"] = "rank_variety";
    j["field_order"] = rep.field_order;
    j["variety_size"] = rep.nonfree_count + 1;  // origin always included
    json pts = json::array();
    for (const auto& rp : rep.points) {
        json pj;
        pj["point"] = point_to_json(F, rp.point);
        pj["in_variety"] = !rp.free;
        pts.push_back(std::move(pj));
    }
    j["points"] = std::move(pts);
    return j.dump(2) + "\n";
}

inline std::string rank_report_csv(const ModuleRep& M, const RankReport& rep) {
    const Field& F = *M.ring.field;
    std::string out = "point,in_variety\n";
    for (const auto& rp : rep.points)
        out += point_to_string(F, rp.point) + "," + (rp.free ? "0" : "1") + "\n";
    return out;
}

inline std::string rank_report_table(const ModuleRep& M, const RankReport& rep) {
    const Field& F = *M.ring.field;
    std::vector<std::vector<std::string>> rows;
    rows.push_back({"point", "in_variety"});
    for (const auto& rp : rep.points)
        rows.push_back({point_to_string(F, rp.point), rp.free ? "no" : "yes"});
    std::vector<std::size_t> width(2, 0);
    for (const auto& r : rows)
        for (std::size_t i = 0; i < 2; ++i) width[i] = std::max(width[i], r[i].size());
    std::ostringstream os;
    for (const auto& r : rows) {
        for (std::size_t i = 0; i < 2; ++i)
            os << std::left << std::setw(static_cast<int>(width[i]) + 2) << r[i];
        os << "\n";
    }
    return os.str();
}

inline std::string rank_report_render(const ModuleRep& M, const RankReport& rep,
                                      OutputFormat fmt) {
    switch (fmt) {
        case OutputFormat::json_fmt: return rank_report_json(M, rep);
        case OutputFormat::csv: return rank_report_csv(M, rep);
        case OutputFormat::table: return rank_report_table(M, rep);
    }
    return {};
}

inline std::string betti_render(const BettiTable& t, OutputFormat fmt) {
    if (fmt == OutputFormat::json_fmt) {
        json j;
        j["schema"] = 1;
        j["kind"] = "betti";
        j["betti"] = t.betti;
        j["stable_periodic"] = t.stable_period_detected;
        if (t.stable_period_detected)
            j["stable_pair"] = {t.stable_pair.first, t.stable_pair.second};
        return j.dump(2) + "\n";
    }
    if (fmt == OutputFormat::csv) {
        std::string out = "i,beta_i\n";
        for (std::size_t i = 0; i < t.betti.size(); ++i)
            out += std::to_string(i) + "," + std::to_string(t.betti[i]) + "\n";
        return out;
    }
    std::ostringstream os;
    os << "i     ";
    for (std::size_t i = 0; i < t.betti.size(); ++i) os << std::setw(6) << i;
    os << "\nbeta  ";
    for (auto b : t.betti) os << std::setw(6) << b;
    os << "\n";
    if (t.stable_period_detected)
        os << "stable 2-periodic tail (" << t.stable_pair.first << ", " << t.stable_pair.second
           << ")\n";
    return os.str();
}

// One verification suite outcome, with enough data to reproduce a failure.
struct VerificationOutcome {
    std::string suite;
    bool passed = true;
    std::size_t trials = 0;
    std::uint64_t seed = 0;
    std::string failure_detail;  // empty when passed

    json to_json() const {
        json j;
        j["suite"] = suite;
        j["passed"] = passed;
        j["trials"] = trials;
        j["seed"] = seed;
        if (!passed) j["failure"] = failure_detail;
        return j;
    }
};

inline std::string outcomes_render(const std::vector<VerificationOutcome>& outs,
                                   OutputFormat fmt) {
    if (fmt == OutputFormat::json_fmt) {
        json j;
        j["schema"] = 1;
        j["kind"] = "verify";
        json arr = json::array();
        bool all = true;
        for (const auto& o : outs) {
            arr.push_back(o.to_json());
            all = all && o.passed;
        }
        j["all_passed"] = all;
        j["suites"] = std::move(arr);
        return j.dump(2) + "\n";
    }
    if (fmt == OutputFormat::csv) {
        std::string out = "suite,passed,trials,seed\n";
        for (const auto& o : outs)
            out += o.suite + "," + (o.passed ? "1" : "0") + "," + std::to_string(o.trials) +
                   "," + std::to_string(o.seed) + "\n";
        return out;
    }
    std::ostringstream os;
    std::size_t w = 4;
    for (const auto& o : outs) w = std::max(w, o.suite.size());
    for (const auto& o : outs) {
        os << std::left << std::setw(static_cast<int>(w) + 2) << o.suite
           << (o.passed ? "PASS" : "FAIL") << "  trials=" << o.trials << " seed=" << o.seed
           << "\n";
        if (!o.passed && !o.failure_detail.empty()) os << "  " << o.failure_detail << "\n";
    }
    return os.str();
}

}  // namespace hypervar

#endif
