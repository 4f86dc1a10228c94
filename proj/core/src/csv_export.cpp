#include "vlab/csv_export.hpp"

#include <charconv>
#include <cmath>

namespace vlab {

std::string format_double(double value)
{
    if (value == 0.0) {
        return "0";  // also folds -0
    }
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

void write_table_csv(std::ostream& os, const BoxMeasureTable& table)
{
    os << "generation,k,innerHalfMass,windowMass,ratio\n";
    for (const auto& e : table.entries) {
        os << e.box.generation << ',' << e.box.position << ',' << format_double(e.innerHalfMass)
           << ',' << format_double(e.windowMass) << ',' << format_double(e.ratio) << '\n';
    }
}

void write_rearranged_csv(std::ostream& os, const RearrangedSequence& sequence)
{
    os << "index,value,generation,k,certified\n";
    for (std::size_t i = 0; i < sequence.values.size(); ++i) {
        const auto& box = sequence.sourceBoxes[i];
        os << (i + 1) << ',' << format_double(sequence.values[i]) << ',' << box.generation << ','
           << box.position << ',' << (i < sequence.certifiedPrefixLength ? 1 : 0) << '\n';
    }
}

void write_spectrum_csv(std::ostream& os, const SingularSpectrum& spectrum)
{
    os << "index,value,converged\n";
    for (std::size_t i = 0; i < spectrum.values.size(); ++i) {
        os << (i + 1) << ',' << format_double(spectrum.values[i]) << ','
           << (i < spectrum.convergedPrefixLength ? 1 : 0) << '\n';
    }
}

void write_matrix_csv(std::ostream& os, const OperatorMatrix& matrix)
{
    os << "row,col,re,im\n";
    for (Eigen::Index i = 0; i < matrix.entries.rows(); ++i) {
        for (Eigen::Index j = 0; j < matrix.entries.cols(); ++j) {
            const auto v = matrix.entries(i, j);
            os << i << ',' << j << ',' << format_double(v.real()) << ','
               << format_double(v.imag()) << '\n';
        }
    }
}

} // namespace vlab
