#include "llq/equation.hpp"

#include <fstream>
#include <sstream>

namespace llq {

std::size_t QuadEquation::num_variables() const {
  switch (form) {
    case EquationForm::Spherical: return k();
    case EquationForm::Orientable: return 2 * static_cast<std::size_t>(genus) + k();
    case EquationForm::NonOrientable: return static_cast<std::size_t>(genus) + k();
  }
  return 0;
}

std::size_t QuadEquation::size_w() const {
  std::size_t n = 0;
  for (const auto& c : coeffs) n += c.size();
  return n + 2 * num_variables();
}

void QuadEquation::validate() const {
  switch (form) {
    case EquationForm::Spherical:
      if (genus != 0) throw malformed_equation("spherical equation must have genus 0");
      if (coeffs.empty()) throw malformed_equation("spherical equation requires k >= 1");
      break;
    case EquationForm::Orientable:
    case EquationForm::NonOrientable:
      if (genus < 1) throw malformed_equation("equation requires genus >= 1");
      break;
  }
}

const char* form_token(EquationForm f) {
  switch (f) {
    case EquationForm::Spherical: return "sph";
    case EquationForm::Orientable: return "or";
    case EquationForm::NonOrientable: return "nonor";
  }
  return "?";
}

namespace {
std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r'))
    s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}
}  // namespace

EquationFile parse_equation_text(std::string_view text) {
  EquationFile out;
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == '\n') {
      lines.push_back(text.substr(start, i - start));
      start = i + 1;
    }
  }
  // drop trailing blank lines so a final newline does not add coefficients
  while (!lines.empty() && trim(lines.back()).empty()) lines.pop_back();
  if (lines.empty()) throw malformed_equation("empty equation file");

  bool header_seen = false;
  for (std::string_view raw : lines) {
    std::string_view line = trim(raw);
    if (!line.empty() && line.front() == '#') {
      out.comments.emplace_back(line);
      continue;
    }
    if (!header_seen) {
      std::istringstream hs{std::string(line)};
      std::string tok;
      bool have_form = false, have_genus = false;
      while (hs >> tok) {
        if (tok.rfind("form=", 0) == 0) {
          const std::string v = tok.substr(5);
          if (v == "sph") out.eq.form = EquationForm::Spherical;
          else if (v == "or") out.eq.form = EquationForm::Orientable;
          else if (v == "nonor") out.eq.form = EquationForm::NonOrientable;
          else throw malformed_equation("unknown form '" + v + "'");
          have_form = true;
        } else if (tok.rfind("genus=", 0) == 0) {
          try {
            out.eq.genus = static_cast<unsigned>(std::stoul(tok.substr(6)));
          } catch (const std::exception&) {
            throw malformed_equation("bad genus value");
          }
          have_genus = true;
        } else {
          throw malformed_equation("unexpected header token '" + tok + "'");
        }
      }
      if (!have_form || !have_genus)
        throw malformed_equation("header must provide form=<sph|or|nonor> genus=<g>");
      header_seen = true;
      continue;
    }
    out.eq.coeffs.push_back(parse_word(line));
  }
  if (!header_seen) throw malformed_equation("missing header line");
  out.eq.validate();
  return out;
}

EquationFile read_equation_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw malformed_equation("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_equation_text(buf.str());
}

std::string format_equation(const QuadEquation& eq, const std::vector<std::string>& comments) {
  std::string out;
  for (const auto& c : comments) {
    out += c;
    out += '\n';
  }
  out += "form=";
  out += form_token(eq.form);
  out += " genus=" + std::to_string(eq.genus) + "\n";
  for (const auto& w : eq.coeffs) {
    out += serialize(w);
    out += '\n';
  }
  return out;
}

}  // namespace llq
