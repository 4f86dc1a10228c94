#pragma once

// CSV writers for tables, sequences and spectra. Numbers use '.' as the
// decimal separator and 17 significant digits so doubles round-trip exactly.
// Every file starts with a single header line naming the columns.

#include "vlab/box_measures.hpp"
#include "vlab/operator_matrices.hpp"
#include "vlab/spectra.hpp"

#include <ostream>
#include <string>

namespace vlab {

/// Shortest-safe rendering used in every CSV/JSON output: 17 significant digits.
std::string format_double(double value);

/// generation,k,innerHalfMass,windowMass,ratio
void write_table_csv(std::ostream& os, const BoxMeasureTable& table);

/// index,value,generation,k,certified   (index is 1-based)
void write_rearranged_csv(std::ostream& os, const RearrangedSequence& sequence);

/// index,value,converged   (index is 1-based)
void write_spectrum_csv(std::ostream& os, const SingularSpectrum& spectrum);

/// row,col,re,im for every entry, row-major.
void write_matrix_csv(std::ostream& os, const OperatorMatrix& matrix);

} // namespace vlab
