#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "llq/word.hpp"

namespace llq {

struct malformed_equation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class EquationForm { Spherical, Orientable, NonOrientable };

/// A standard-form quadratic equation:
///   spherical          prod_j z_j^-1 c_j z_j = 1            (genus 0, k >= 1)
///   orientable         prod_i [x_i,y_i] prod_j z_j^-1 c_j z_j = 1   (g >= 1)
///   non-orientable     prod_i x_i^2 prod_j z_j^-1 c_j z_j = 1       (g >= 1)
struct QuadEquation {
  EquationForm form = EquationForm::Spherical;
  unsigned genus = 0;
  std::vector<GroupWord> coeffs;

  std::size_t k() const { return coeffs.size(); }
  std::size_t num_variables() const;
  /// |W|: total coefficient letters plus two occurrences per variable.
  std::size_t size_w() const;
  void validate() const;  // throws malformed_equation
};

/// Text format: header `form=<sph|or|nonor> genus=<g>`, then one coefficient
/// word per line. Lines starting with '#' are comments and are preserved.
struct EquationFile {
  QuadEquation eq;
  std::vector<std::string> comments;
};

EquationFile parse_equation_text(std::string_view text);
EquationFile read_equation_file(const std::string& path);
std::string format_equation(const QuadEquation& eq,
                            const std::vector<std::string>& comments = {});

const char* form_token(EquationForm f);  // "sph" | "or" | "nonor"

}  // namespace llq
