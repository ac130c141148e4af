#pragma once

#include <string>

#include "oscdirac/lattice.hpp"

namespace oscdirac {

/// Machine-readable spectrum result. Eigenvalues are serialized as {re, im}
/// pairs of decimal strings with 15 significant digits; serialize(parse(s))
/// is the identity on documents this tool emits.
struct SpectrumDocument {
    std::string tool_version;
    LatticeParams lattice;
    SpinStructure spin;
    std::string op;  // "casimir" | "dirac"
    double t = 1.0 / 3.0;
    double cutoff = 0.0;
    SymmetryClass symmetry = SymmetryClass::Asymmetric;
    bool normalization_applied = false;
    bool inexact_grouping = false;
    std::vector<SpectralLine> lines;
};

/// Computes the document for a lattice + spin structure, auto-normalizing the
/// (1,0) row via normalize_spin.
SpectrumDocument compute_spectrum_document(const LatticeParams& l, const SpinStructure& eps,
                                           const std::string& op, double t, double cutoff);

std::string to_json(const SpectrumDocument& doc);
SpectrumDocument from_json(const std::string& json_text);

std::string to_csv(const SpectrumDocument& doc);

/// Text rendering of the 3x4 spectrum table with the active cell highlighted.
std::string to_table(const SpectrumDocument& doc);

/// 15-significant-digit decimal form used for eigenvalue serialization.
std::string format_sig15(double x);

}  // namespace oscdirac
