#include "rsum/json_io.hpp"

#include <sstream>
#include <stdexcept>

namespace rsum {

OutputFormat parse_format(const std::string& s) {
    if (s == "json") return OutputFormat::json;
    if (s == "csv") return OutputFormat::csv;
    if (s == "human") return OutputFormat::human;
    throw std::invalid_argument("unknown output format \"" + s + "\" (json|csv|human)");
}

Json to_json(const ResidueSet& s) {
    Json arr = Json::array();
    for (unsigned r : s.elements()) arr.push_back(r);
    return arr;
}

Json to_json(const Rational& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Json to_json(const CycNum& x) {
    Json arr = Json::array();
    for (const auto& q : x.coeffs()) arr.push_back(to_json(q));
    return arr;
}

Json to_json(const ZpFunction& f) {
    Json arr = Json::array();
    for (const auto& v : f.values()) arr.push_back(to_json(v));
    return arr;
}

Json to_json(const BoundReport& r) {
    Json j;
    j["cd"] = r.cd;
    if (r.eh)
        j["eh"] = *r.eh;
    else
        j["eh"] = nullptr;
    j["thm2"] = r.thm2;
    j["pan_sun"] = r.pan_sun;
    j["clamped"] = r.clamped;
    return j;
}

ResidueSet residue_set_from_json(PrimeModulus p, const Json& j) {
    if (!j.is_array()) throw std::invalid_argument("set JSON must be an array");
    std::vector<long long> xs;
    for (const auto& e : j) xs.push_back(e.get<long long>());
    return ResidueSet::from_elements(p, xs);
}

Rational rational_from_json(const Json& j) {
    const std::string s = j.get<std::string>();
    Rational q;
    if (mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0 || q.get_den() == 0)
        throw std::invalid_argument("bad rational literal \"" + s + "\"");
    q.canonicalize();
    return q;
}

CycNum cycnum_from_json(PrimeModulus p, const Json& j) {
    if (!j.is_array() || j.size() != p.value() - 1)
        throw std::invalid_argument("CycNum JSON must be an array of p-1 strings");
    std::vector<Rational> coeffs;
    coeffs.reserve(j.size());
    for (const auto& e : j) coeffs.push_back(rational_from_json(e));
    return CycNum::from_coeffs(p, std::move(coeffs));
}

ZpFunction zpfunction_from_json(PrimeModulus p, const Json& j) {
    if (!j.is_array() || j.size() != p.value())
        throw std::invalid_argument("ZpFunction JSON must be an array of p values");
    std::vector<CycNum> vals;
    vals.reserve(j.size());
    for (const auto& e : j) vals.push_back(cycnum_from_json(p, e));
    return ZpFunction::from_values(p, std::move(vals));
}

BoundReport bound_report_from_json(const Json& j) {
    BoundReport r{};
    r.cd = j.at("cd").get<int>();
    if (!j.at("eh").is_null()) r.eh = j.at("eh").get<int>();
    r.thm2 = j.at("thm2").get<int>();
    r.pan_sun = j.at("pan_sun").get<int>();
    r.clamped = j.at("clamped").get<bool>();
    return r;
}

Json to_json(const TraceReport& r) {
    Json ctx;
    ctx["p"] = r.context.p.value();
    ctx["a"] = to_json(r.context.A);
    ctx["b"] = to_json(r.context.B);
    ctx["s"] = to_json(r.context.S);
    ctx["swapped"] = r.context.swapped;
    ctx["k"] = r.context.k;
    ctx["l"] = r.context.l;
    ctx["a_hat"] = to_json(r.context.A_hat);
    ctx["b_hat"] = to_json(r.context.B_hat);

    Json j;
    j["context"] = std::move(ctx);
    j["seed"] = r.seed;
    j["f"] = to_json(r.f);
    j["g"] = to_json(r.g);
    j["F"] = to_json(r.F);
    j["F_hat"] = to_json(r.F_hat);
    Json checks = Json::array();
    for (const auto& c : r.checks) {
        Json e;
        e["name"] = c.name;
        e["passed"] = c.passed;
        checks.push_back(std::move(e));
    }
    j["checks"] = std::move(checks);
    j["branch"] = r.branch;
    j["derived_bound"] = r.derived_bound;
    j["actual_c"] = to_json(r.actual_C);
    j["actual_c_size"] = r.actual_C.size();
    return j;
}

Json to_json(const SearchReport& r) {
    Json spec;
    spec["p"] = r.spec.p.value();
    spec["a_size"] = r.spec.nA;
    spec["b_size"] = r.spec.nB;
    spec["s_size"] = r.spec.nS;
    const bool sampled = r.spec.mode == SearchSpec::Mode::sampled;
    spec["mode"] = sampled ? "sampled" : "exhaustive";
    if (sampled) {
        spec["samples"] = r.spec.sample_count;
        spec["seed"] = r.spec.seed;
    } else {
        spec["samples"] = nullptr;
        spec["seed"] = nullptr;
    }
    spec["symmetry_reduction"] = r.spec.symmetry_reduction;

    Json j;
    j["spec"] = std::move(spec);
    j["min_c"] = r.min_c;
    j["empty_scan"] = r.empty_scan;
    j["upper_bound_only"] = r.upper_bound_only;
    Json wits = Json::array();
    for (const auto& w : r.extremal_witnesses) {
        Json e;
        e["a"] = to_json(ResidueSet::from_mask(r.spec.p, w[0]));
        e["b"] = to_json(ResidueSet::from_mask(r.spec.p, w[1]));
        e["s"] = to_json(ResidueSet::from_mask(r.spec.p, w[2]));
        wits.push_back(std::move(e));
    }
    j["extremal_witnesses"] = std::move(wits);
    j["bounds"] = to_json(r.bounds);
    j["tight_thm2"] = r.tight_thm2;
    j["tight_pan_sun"] = r.tight_pan_sun;
    j["conjecture_value"] = r.conjecture_value;
    j["conjecture_tight"] = r.conjecture_tight;
    j["conjecture_violated"] = r.conjecture_violated;
    j["configs_scanned"] = r.configs_scanned;
    return j;
}

Json scan_to_json(PrimeModulus p, int max_s, const std::vector<ScanCell>& cells) {
    Json j;
    j["p"] = p.value();
    j["max_s"] = max_s;
    Json arr = Json::array();
    for (const auto& c : cells) {
        Json e;
        e["a_size"] = c.nA;
        e["b_size"] = c.nB;
        e["s_size"] = c.nS;
        e["configs"] = c.configs_all;
        e["min_c_all"] = c.min_all;
        e["configs_a_neq_b"] = c.configs_a_neq_b;
        e["min_c_a_neq_b"] = c.min_a_neq_b;
        e["thm2"] = c.thm2;
        e["pan_sun"] = c.pan_sun;
        e["conjecture"] = c.conjecture;
        e["s_even"] = c.s_even;
        e["holds_even_s"] = c.holds_even_s;
        e["holds_a_neq_b"] = c.holds_a_neq_b;
        arr.push_back(std::move(e));
    }
    j["cells"] = std::move(arr);
    return j;
}

ResidueSet parse_set_literal(const std::string& text, PrimeModulus p) {
    ResidueSet s(p);
    if (text.empty()) return s;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        std::size_t pos = 0;
        long long v;
        try {
            v = std::stoll(tok, &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad set literal element \"" + tok + "\"");
        }
        if (pos != tok.size())
            throw std::invalid_argument("bad set literal element \"" + tok + "\"");
        if (v < 0 || v >= static_cast<long long>(p.value()))
            throw std::invalid_argument("set element " + tok + " is not a canonical residue mod " +
                                        std::to_string(p.value()));
        if (s.contains(static_cast<unsigned>(v)))
            throw std::invalid_argument("duplicate set element " + tok);
        s = s.with(static_cast<unsigned>(v));
    }
    return s;
}

std::string set_literal(const ResidueSet& s) {
    std::string out;
    for (unsigned r : s.elements()) {
        if (!out.empty()) out += ",";
        out += std::to_string(r);
    }
    return out;
}

std::string bound_report_csv(const BoundReport& r) {
    std::ostringstream os;
    os << "cd,eh,thm2,pan_sun,clamped\n";
    os << r.cd << "," << (r.eh ? std::to_string(*r.eh) : "") << "," << r.thm2 << "," << r.pan_sun
       << "," << (r.clamped ? "true" : "false") << "\n";
    return os.str();
}

std::string search_report_csv(const SearchReport& r) {
    std::ostringstream os;
    os << "p,a_size,b_size,s_size,mode,min_c,thm2,pan_sun,tight_thm2,tight_pan_sun,"
          "conjecture_value,witness_a,witness_b,witness_s\n";
    const std::string mode = r.spec.mode == SearchSpec::Mode::sampled ? "sampled" : "exhaustive";
    auto row_prefix = [&](std::ostringstream& o) {
        o << r.spec.p.value() << "," << r.spec.nA << "," << r.spec.nB << "," << r.spec.nS << ","
          << mode << "," << r.min_c << "," << r.bounds.thm2 << "," << r.bounds.pan_sun << ","
          << (r.tight_thm2 ? "true" : "false") << "," << (r.tight_pan_sun ? "true" : "false") << ","
          << r.conjecture_value;
    };
    if (r.extremal_witnesses.empty()) {
        row_prefix(os);
        os << ",,,\n";
        return os.str();
    }
    for (const auto& w : r.extremal_witnesses) {
        row_prefix(os);
        os << ",\"" << set_literal(ResidueSet::from_mask(r.spec.p, w[0])) << "\",\""
           << set_literal(ResidueSet::from_mask(r.spec.p, w[1])) << "\",\""
           << set_literal(ResidueSet::from_mask(r.spec.p, w[2])) << "\"\n";
    }
    return os.str();
}

std::string scan_csv(PrimeModulus p, const std::vector<ScanCell>& cells) {
    std::ostringstream os;
    os << "p,a_size,b_size,s_size,configs,min_c_all,configs_a_neq_b,min_c_a_neq_b,thm2,pan_sun,"
          "conjecture,s_even,holds_even_s,holds_a_neq_b\n";
    for (const auto& c : cells) {
        os << p.value() << "," << c.nA << "," << c.nB << "," << c.nS << "," << c.configs_all << ","
           << c.min_all << "," << c.configs_a_neq_b << "," << c.min_a_neq_b << "," << c.thm2 << ","
           << c.pan_sun << "," << c.conjecture << "," << (c.s_even ? "true" : "false") << ","
           << (c.holds_even_s ? "true" : "false") << "," << (c.holds_a_neq_b ? "true" : "false")
           << "\n";
    }
    return os.str();
}

std::string bound_report_human(const BoundReport& r) {
    std::ostringstream os;
    os << "cd=" << r.cd;
    if (r.eh) os << " eh=" << *r.eh;
    os << " thm2=" << r.thm2 << " pan_sun=" << r.pan_sun;
    if (r.clamped) os << " (clamped)";
    os << "\n";
    return os.str();
}

std::string search_report_human(const SearchReport& r) {
    std::ostringstream os;
    os << (r.spec.mode == SearchSpec::Mode::sampled ? "sampled" : "exhaustive") << " scan p="
       << r.spec.p.value() << " |A|=" << r.spec.nA << " |B|=" << r.spec.nB << " |S|=" << r.spec.nS
       << ": min |C| = " << r.min_c;
    if (r.upper_bound_only) os << " (upper bound)";
    if (r.empty_scan) os << " (empty scan)";
    os << "\n  thm2 bound " << r.bounds.thm2 << (r.tight_thm2 ? " (tight)" : "") << ", pan_sun "
       << r.bounds.pan_sun << (r.tight_pan_sun ? " (tight)" : "") << ", conjecture "
       << r.conjecture_value << (r.conjecture_violated ? " (below!)" : r.conjecture_tight ? " (tight)" : "")
       << "\n  configs scanned: " << r.configs_scanned << ", elapsed " << r.elapsed_seconds << " s\n";
    for (const auto& w : r.extremal_witnesses)
        os << "  witness A={" << set_literal(ResidueSet::from_mask(r.spec.p, w[0])) << "} B={"
           << set_literal(ResidueSet::from_mask(r.spec.p, w[1])) << "} S={"
           << set_literal(ResidueSet::from_mask(r.spec.p, w[2])) << "}\n";
    return os.str();
}

std::string trace_report_human(const TraceReport& r) {
    std::ostringstream os;
    os << "trace p=" << r.context.p.value() << " A={" << set_literal(r.context.A) << "} B={"
       << set_literal(r.context.B) << "} S={" << set_literal(r.context.S) << "}"
       << (r.context.swapped ? " (inputs swapped, S negated)" : "") << "\n";
    os << "  k=" << r.context.k << " l=" << r.context.l << " A_hat={" << set_literal(r.context.A_hat)
       << "} B_hat={" << set_literal(r.context.B_hat) << "}\n";
    for (const auto& c : r.checks)
        os << "  [" << (c.passed ? "ok" : "FAIL") << "] " << c.name << "\n";
    os << "  branch " << r.branch << ", derived bound " << r.derived_bound << ", actual |C| = "
       << r.actual_C.size() << "\n";
    return os.str();
}

}  // namespace rsum
