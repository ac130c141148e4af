#include "oscdirac/spectrum_doc.hpp"

#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "oscdirac/version.hpp"

namespace oscdirac {

using nlohmann::json;

std::string format_sig15(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.15g", x);
    return buf;
}

SpectrumDocument compute_spectrum_document(const LatticeParams& l, const SpinStructure& eps,
                                           const std::string& op, double t, double cutoff) {
    auto [lat, spin] = normalize_spin(l, eps);
    SpectrumDocument doc;
    doc.tool_version = kVersion;
    doc.lattice = lat;
    doc.spin = spin;
    doc.op = op;
    doc.t = t;
    doc.cutoff = cutoff;
    doc.normalization_applied = !(spin.e1 == eps.e1 && spin.e2 == eps.e2);
    doc.symmetry = symmetry_check(lat, spin);
    if (op == "casimir") {
        doc.lines = casimir_spectrum(lat, spin, cutoff);
    } else if (op == "dirac") {
        doc.lines = dirac_point_spectrum(lat, spin, t, cutoff);
    } else {
        throw std::invalid_argument("operator must be casimir or dirac");
    }
    doc.inexact_grouping = !lat.exact_rational_form();
    return doc;
}

namespace {

json scalar_to_json(const ScalarInput& s) {
    json j;
    j["value"] = s.value;
    if (s.exact()) {
        j["coef"] = s.coef->str();
        j["radicand"] = s.radicand;
    }
    return j;
}

ScalarInput scalar_from_json(const json& j) {
    if (j.contains("coef")) {
        std::string coef = j["coef"].get<std::string>();
        auto in = parse_scalar(coef);
        return ScalarInput::from_surd(*in.coef, j["radicand"].get<std::int64_t>());
    }
    return ScalarInput::from_double(j["value"].get<double>());
}

}  // namespace

std::string to_json(const SpectrumDocument& doc) {
    json j;
    j["tool"] = {{"name", "oscspec"}, {"version", doc.tool_version}};
    j["lattice"] = {{"r", doc.lattice.r},
                    {"kappa", doc.lattice.kappa},
                    {"mu", scalar_to_json(doc.lattice.mu)},
                    {"nu", scalar_to_json(doc.lattice.nu)},
                    {"beta", doc.lattice.beta()}};
    j["spin_structure"] = doc.spin.str();
    j["operator"] = doc.op;
    if (doc.op == "dirac") j["t"] = doc.t;
    j["cutoff"] = doc.cutoff;
    j["flags"] = {{"symmetry_class", symmetry_class_name(doc.symmetry)},
                  {"normalization_applied", doc.normalization_applied},
                  {"inexact_grouping", doc.inexact_grouping}};
    json lines = json::array();
    for (const auto& line : doc.lines) {
        json jl;
        jl["eigenvalue"] = {{"re", format_sig15(line.eigenvalue.real())},
                            {"im", format_sig15(line.eigenvalue.imag())}};
        jl["multiplicity"] = line.multiplicity;
        jl["infinite_family"] = line.infinite_family;
        json src = json::array();
        for (const auto& s : line.sources) src.push_back(s.str());
        jl["sources"] = src;
        lines.push_back(std::move(jl));
    }
    j["lines"] = std::move(lines);
    return j.dump(2);
}

SpectrumDocument from_json(const std::string& json_text) {
    json j = json::parse(json_text);
    SpectrumDocument doc;
    doc.tool_version = j["tool"]["version"].get<std::string>();
    doc.lattice = LatticeParams::make_exact(j["lattice"]["r"].get<int>(), j["lattice"]["kappa"].get<int>(),
                                            scalar_from_json(j["lattice"]["mu"]),
                                            scalar_from_json(j["lattice"]["nu"]));
    doc.spin = SpinStructure::parse(j["spin_structure"].get<std::string>());
    doc.op = j["operator"].get<std::string>();
    doc.t = j.contains("t") ? j["t"].get<double>() : 1.0 / 3.0;
    doc.cutoff = j["cutoff"].get<double>();
    std::string sym = j["flags"]["symmetry_class"].get<std::string>();
    doc.symmetry = sym == "symmetric_with_zero"      ? SymmetryClass::SymmetricWithZero
                   : sym == "symmetric_without_zero" ? SymmetryClass::SymmetricWithoutZero
                                                     : SymmetryClass::Asymmetric;
    doc.normalization_applied = j["flags"]["normalization_applied"].get<bool>();
    doc.inexact_grouping = j["flags"]["inexact_grouping"].get<bool>();
    for (const auto& jl : j["lines"]) {
        SpectralLine line;
        line.eigenvalue = complexd(std::stod(jl["eigenvalue"]["re"].get<std::string>()),
                                   std::stod(jl["eigenvalue"]["im"].get<std::string>()));
        line.multiplicity = jl["multiplicity"].get<long>();
        line.infinite_family = jl["infinite_family"].get<bool>();
        for (const auto& s : jl["sources"]) line.sources.push_back(IrrepLabel::parse(s.get<std::string>()));
        doc.lines.push_back(std::move(line));
    }
    return doc;
}

std::string to_csv(const SpectrumDocument& doc) {
    std::ostringstream out;
    out << "eigenvalue_re,eigenvalue_im,multiplicity,sources\n";
    for (const auto& line : doc.lines) {
        out << format_sig15(line.eigenvalue.real()) << ',' << format_sig15(line.eigenvalue.imag()) << ','
            << (line.infinite_family ? "inf" : std::to_string(line.multiplicity)) << ',';
        for (std::size_t i = 0; i < line.sources.size(); ++i) {
            if (i) out << ';';
            out << line.sources[i].str();
        }
        out << '\n';
    }
    return out.str();
}

std::string to_table(const SpectrumDocument& doc) {
    // the 3x4 support table keyed by (eps1,eps2) x (eps3, eps4+kappa)
    const char* rows[3] = {"(0,0)", "(0,1)", "(1,1)"};
    const char* cols[4] = {"(0,0)", "(0,1)", "(1,0)", "(1,1)"};
    auto cell = [&](int row, int col) -> std::string {
        std::string aj = "A" + std::to_string(row);
        switch (col) {
            case 0: return aj + " u 4bZ";
            case 1: return aj + (row == 0 ? " u 2bZ" : " u 2bZ\\{0}");
            case 2: return "2bZ";
            case 3: return "b(2Z+1)";
        }
        return {};
    };
    int active_row = (doc.spin.e1 == 0 && doc.spin.e2 == 0) ? 0 : (doc.spin.e1 == 0 ? 1 : 2);
    int active_col = 2 * doc.spin.e3 + ((doc.spin.e4 + doc.lattice.kappa) % 2);

    std::ostringstream out;
    out << "spec(-Omega) support, b = beta = pi r / kappa = " << format_sig15(doc.lattice.beta()) << "\n";
    out << "(e1,e2) \\ (e3,e4+k) |";
    for (auto* c : cols) out << "   " << c << "        ";
    out << "\n";
    for (int rrow = 0; rrow < 3; ++rrow) {
        out << "      " << rows[rrow] << "       |";
        for (int col = 0; col < 4; ++col) {
            std::string c = cell(rrow, col);
            bool active = (rrow == active_row && col == active_col);
            std::string marked = active ? "[" + c + "]" : " " + c + " ";
            marked.resize(14, ' ');
            out << marked;
        }
        out << "\n";
    }
    out << "active cell: row (e1,e2)=(" << doc.spin.e1 << "," << doc.spin.e2 << "), column (e3,e4+kappa)=("
        << doc.spin.e3 << "," << (doc.spin.e4 + doc.lattice.kappa) % 2 << ")\n";
    out << "lines up to cutoff " << format_sig15(doc.cutoff) << ":\n";
    for (const auto& line : doc.lines) {
        out << "  " << format_sig15(line.eigenvalue.real());
        if (line.eigenvalue.imag() != 0) out << " + " << format_sig15(line.eigenvalue.imag()) << "i";
        out << "  multiplicity ";
        if (line.infinite_family) out << "inf";
        else out << line.multiplicity;
        out << "\n";
    }
    return out.str();
}

}  // namespace oscdirac
