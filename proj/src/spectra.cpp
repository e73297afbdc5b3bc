#include "codewig/spectra.hpp"

#include <ostream>

#include "codewig/format.hpp"

namespace codewig {

void write_eigenvalue_csv(std::ostream& out, const Eigen::VectorXd& eigs) {
  out << "lambda\n";
  for (Eigen::Index i = 0; i < eigs.size(); ++i) out << format_double(eigs(i)) << '\n';
}

}  // namespace codewig
