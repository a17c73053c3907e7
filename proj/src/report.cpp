#include "rde/report.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

namespace rde::report {

using nlohmann::json;
using shift_poly::ShiftPoly;
using shift_poly::to_string;

namespace {

json poly_json(const ShiftPoly& p) {
    json coeffs = json::array();
    for (const auto& c : p.c) coeffs.push_back(c.get_str());
    return json{{"Y", to_string(p)}, {"X", to_string(shift_poly::to_char(p), 'X')},
                {"coeffs", coeffs}};
}

json recurrence_record(const recurrence::Recurrence& r) {
    return json{{"annihilator", poly_json(r.annihilator)},
                {"validity_index", r.validity_index},
                {"tested_range", {r.tested_from, r.tested_to}}};
}

std::string real_str(const binet::Real& v, int digits) {
    return v.str(digits, std::ios_base::fmtflags(0));
}

}  // namespace

json ledger_json(const expansion::ExpansionResult& exp) {
    json rows = json::array();
    for (const auto& r : exp.ledger)
        rows.push_back(json{{"id", r.id},
                            {"pending", r.pending},
                            {"mode", std::string(1, r.mode)},
                            {"parent", r.parent},
                            {"del_row", r.del_row},
                            {"del_col", r.del_col},
                            {"coeff", to_string(r.coeff)}});
    return json{{"schema_version", kSchemaVersion},
                {"min_size", exp.min_size},
                {"num_families", exp.families.size()},
                {"rows", rows}};
}

json system_json(const expansion::PolyMatrix& m, const std::vector<int>* support) {
    json entries = json::array();
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m.size(); ++j)
            if (!m[i][j].is_zero())
                entries.push_back(json{{"row", i + 1}, {"col", j + 1}, {"poly", to_string(m[i][j])}});
    json out{{"schema_version", kSchemaVersion}, {"size", m.size()}, {"entries", entries}};
    if (support) out["support"] = *support;
    return out;
}

json recurrence_json(const pipeline::FamilyRun& run) {
    json out{{"schema_version", kSchemaVersion}, {"family", run.spec->name}};
    if (run.system_annihilator) out["system_annihilator"] = poly_json(*run.system_annihilator);
    if (!run.annihilate_note.empty()) out["note"] = run.annihilate_note;
    if (run.den_annihilator) out["denominator_annihilator"] = poly_json(*run.den_annihilator);
    if (run.num_min) out["numerator_minimal"] = recurrence_record(*run.num_min);
    if (run.den_min) out["denominator_minimal"] = recurrence_record(*run.den_min);
    if (run.stride2) {
        out["stride2"] = json{{"full", poly_json(run.stride2->full)},
                              {"original_variable", poly_json(run.stride2->original)},
                              {"minimal", recurrence_record(run.stride2->minimal)}};
    }
    return out;
}

json binet_json(const pipeline::FamilyRun& run) {
    json out{{"schema_version", kSchemaVersion}, {"family", run.spec->name}};
    auto form_json = [](const binet::BinetForm& bf) {
        int d = bf.precision_digits;
        json roots = json::array();
        for (std::size_t i = 0; i < bf.roots.size(); ++i) {
            json coeffs = json::array();
            for (const auto& c : bf.coeffs[i])
                coeffs.push_back(json{{"re", real_str(c.re, d)}, {"im", real_str(c.im, d)}});
            roots.push_back(json{{"re", real_str(bf.roots[i].value.re, d)},
                                 {"im", real_str(bf.roots[i].value.im, d)},
                                 {"mult", bf.roots[i].mult},
                                 {"is_real", bf.roots[i].is_real},
                                 {"coeffs", coeffs}});
        }
        return json{{"roots", roots},
                    {"fit_from", bf.fit_from},
                    {"start_shift", bf.start_shift},
                    {"precision_digits", bf.precision_digits}};
    };
    if (run.num_bf) out["numerator"] = form_json(*run.num_bf);
    if (run.den_bf) out["denominator"] = form_json(*run.den_bf);
    if (run.one_over_14) {
        const auto& rep = *run.one_over_14;
        int d = run.num_bf->precision_digits;
        json dev = json::array();
        for (const auto& v : rep.asym_deviation) dev.push_back(real_str(v, d));
        json diffs = json::array();
        for (const auto& [n, r] : rep.exact_diffs)
            diffs.push_back(json{{"n", n}, {"diff", r.get_str()}});
        json nr = json::array(), dr = json::array();
        for (const auto& v : rep.num_ratios) nr.push_back(real_str(v, d));
        for (const auto& v : rep.den_ratios) dr.push_back(real_str(v, d));
        out["one_over_14"] = json{{"r1", real_str(rep.r1, d)},
                                  {"C_num1", real_str(rep.c_num1, d)},
                                  {"C_num2", real_str(rep.c_num2, d)},
                                  {"C_den", real_str(rep.c_den, d)},
                                  {"asymptotic_deviation_n40_60", dev},
                                  {"exact_successive_diffs", diffs},
                                  {"numerator_ratios_n8_15", nr},
                                  {"denominator_ratios_n6_15", dr}};
    }
    return out;
}

std::string resistance_csv(const pipeline::FamilyRun& run) {
    std::ostringstream out;
    out << "n,resistance,decimal\n";
    for (const auto& [n, r] : run.resistance) {
        binet::Real dec = binet::to_real(r);
        out << n << "," << r.get_str() << "," << real_str(dec, 20) << "\n";
    }
    return out.str();
}

std::string report_text(const pipeline::FamilyRun& run) {
    std::ostringstream out;
    out << "family: " << run.spec->name << "\n";
    out << "min_size: " << run.min_size << "\n";
    out << "expansions: " << run.num_exp.ledger.size()
        << "  families: " << run.num_exp.families.size() << "\n";
    if (run.num_red) {
        out << "support:";
        for (int s : run.num_red->support) out << " " << s;
        out << "\n";
    }
    if (!run.annihilate_note.empty()) out << "note: " << run.annihilate_note << "\n";
    if (run.system_annihilator)
        out << "system annihilator: " << to_string(*run.system_annihilator) << "\n";
    if (run.den_exp)
        out << "denominator expansions: " << run.den_exp->ledger.size()
            << "  families: " << run.den_exp->families.size() << "\n";
    if (run.num_min)
        out << "numerator minimal: " << to_string(run.num_min->annihilator)
            << "  validity: " << run.num_min->validity_index << "\n";
    if (run.den_min)
        out << "denominator minimal: " << to_string(run.den_min->annihilator)
            << "  validity: " << run.den_min->validity_index << "\n";
    if (run.stride2)
        out << "stride-2 annihilator (original variable): " << to_string(run.stride2->original)
            << "\n"
        << "stride-2 minimal (compressed): " << to_string(run.stride2->minimal.annihilator)
        << "\n";
    if (run.one_over_14) {
        const auto& rep = *run.one_over_14;
        out << "dominant root r1 = " << real_str(rep.r1, 20) << "\n";
        out << "C'_num1 = " << real_str(rep.c_num1, 10) << "  C'_num2 = "
            << real_str(rep.c_num2, 10) << "  C'_den = " << real_str(rep.c_den, 10) << "\n";
        out << "asymptotic successive difference deviation from 1/14 (n=40): "
            << real_str(rep.asym_deviation.front(), 5) << "\n";
    }
    if (!run.resistance.empty()) {
        out << "resistance r(1,n) for n = " << run.resistance.front().first << ".."
            << run.resistance.back().first << ":\n";
        for (const auto& [n, r] : run.resistance)
            out << "  " << n << ": " << r.get_str() << "\n";
    }
    return out.str();
}

void write_run(const pipeline::FamilyRun& run, const std::string& out_dir) {
    namespace fs = std::filesystem;
    fs::create_directories(out_dir);
    auto dump = [&](const std::string& name, const std::string& text) {
        std::ofstream f(fs::path(out_dir) / name);
        f << text;
    };
    dump("ledger.json", ledger_json(run.num_exp).dump(2) + "\n");
    dump("Q.json", system_json(run.num_exp.Q).dump(2) + "\n");
    if (run.num_red)
        dump("R.json", system_json(run.num_red->R, &run.num_red->support).dump(2) + "\n");
    dump("recurrence.json", recurrence_json(run).dump(2) + "\n");
    if (run.num_bf) dump("binet.json", binet_json(run).dump(2) + "\n");
    if (!run.resistance.empty()) dump("resistance.csv", resistance_csv(run));
    dump("report.txt", report_text(run));
}

}  // namespace rde::report
