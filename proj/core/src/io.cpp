#include "mordell/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace mordell::io {

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string format_complex(Complex v) {
  if (v.imag() == 0.0) return format_double(v.real());
  std::string s = format_double(v.real());
  s += v.imag() < 0.0 ? "-" : "+";
  s += format_double(std::abs(v.imag()));
  s += "i";
  return s;
}

std::optional<Complex> parse_complex(std::string_view text) {
  if (text.empty()) return std::nullopt;
  auto parse_num = [](std::string_view s, double& out, std::size_t& used) {
    const char* begin = s.data();
    const char* end = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(begin, end, out);
    if (ec != std::errc()) return false;
    used = static_cast<std::size_t>(ptr - begin);
    return true;
  };

  // grammar: a | bi | a+bi | a-bi  (no spaces; b may carry its own sign)
  bool negate_first = false;
  std::string_view rest = text;
  if (rest.front() == '+' || rest.front() == '-') {
    negate_first = rest.front() == '-';
    rest.remove_prefix(1);
    if (rest.empty()) return std::nullopt;
  }
  double first = 0.0;
  std::size_t used = 0;
  if (!parse_num(rest, first, used)) return std::nullopt;
  if (negate_first) first = -first;
  rest.remove_prefix(used);

  if (rest.empty()) return Complex(first, 0.0);
  if (rest == "i") return Complex(0.0, first);
  if (rest.front() != '+' && rest.front() != '-') return std::nullopt;
  bool negate_second = rest.front() == '-';
  rest.remove_prefix(1);
  double second = 0.0;
  if (!parse_num(rest, second, used)) return std::nullopt;
  rest.remove_prefix(used);
  if (rest != "i") return std::nullopt;
  return Complex(first, negate_second ? -second : second);
}

namespace {

void json_string(std::string& out, std::string_view s) {
  out += '"';
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      default: out += c;
    }
  }
  out += '"';
}

bool case_uses_k(const identities::IdentityCase& c) {
  using identities::Identity;
  switch (c.id) {
    case Identity::h_transform:
    case Identity::j_transform:
    case Identity::exact_cor:
    case Identity::exact_neg:
    case Identity::exact_full:
    case Identity::ramtran_i:
    case Identity::ramtran_iii:
      return true;
    default:
      return false;
  }
}

bool case_uses_q(const identities::IdentityCase& c) {
  using identities::Identity;
  return c.id == Identity::char_even || c.id == Identity::char_odd;
}

std::string csv_field(std::string_view s) {
  bool quote = s.find_first_of(",\"\n") != std::string_view::npos;
  if (!quote) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

std::string to_json(const identities::VerificationRecord& rec) {
  std::string out = "{\"identity\":";
  json_string(out, identities::identity_name(rec.kase.id));
  out += ",\"params\":{\"alpha\":" + format_double(rec.kase.alpha);
  out += ",\"z\":{\"re\":" + format_double(rec.kase.z.real()) +
         ",\"im\":" + format_double(rec.kase.z.imag()) + "}";
  if (case_uses_k(rec.kase)) out += ",\"k\":" + std::to_string(rec.kase.k);
  if (case_uses_q(rec.kase)) out += ",\"q\":" + std::to_string(rec.kase.q);
  out += "},\"sides\":[";
  for (std::size_t i = 0; i < rec.sides.size(); ++i) {
    if (i) out += ',';
    const identities::SideValue& s = rec.sides[i];
    out += "{\"label\":";
    json_string(out, s.label);
    out += ",\"re\":" + format_double(s.value.real());
    out += ",\"im\":" + format_double(s.value.imag());
    out += ",\"err\":" + format_double(s.err);
    if (!s.error.empty()) {
      out += ",\"error\":";
      json_string(out, s.error);
    }
    out += "}";
  }
  out += "],\"residuals\":[";
  for (std::size_t i = 0; i < rec.residuals.size(); ++i) {
    if (i) out += ',';
    out += format_double(rec.residuals[i]);
  }
  out += "],\"passed\":";
  out += rec.passed ? "true" : "false";
  out += ",\"wall_ms\":" + format_double(rec.wall_ms);
  out += "}";
  return out;
}

std::string to_pretty(const identities::VerificationRecord& rec) {
  std::ostringstream os;
  os << "identity " << identities::identity_name(rec.kase.id)
     << "  alpha=" << rec.kase.alpha;
  os << "  z=" << format_complex(rec.kase.z);
  if (case_uses_k(rec.kase)) os << "  k=" << rec.kase.k;
  if (case_uses_q(rec.kase)) os << "  q=" << rec.kase.q;
  os << "\n";
  for (const identities::SideValue& s : rec.sides) {
    os << "  " << s.label << " = ";
    if (s.error.empty()) {
      os << format_complex(s.value) << "  (err est " << s.err << ")";
    } else {
      os << "FAILED: " << s.error;
    }
    os << "\n";
  }
  std::size_t pair = 0;
  for (std::size_t i = 0; i < rec.sides.size(); ++i)
    for (std::size_t j = i + 1; j < rec.sides.size(); ++j, ++pair)
      os << "  |" << rec.sides[i].label << " - " << rec.sides[j].label
         << "| = " << rec.residuals[pair] << "  (tol " << rec.tolerances[pair]
         << ")\n";
  os << (rec.passed ? "PASSED" : "FAILED") << "  (" << rec.wall_ms << " ms)\n";
  return os.str();
}

std::string verify_csv_header() {
  return "identity,alpha,z_re,z_im,k,q,n_sides,max_residual,passed,wall_ms";
}

std::string to_csv_row(const identities::VerificationRecord& rec) {
  double max_res = 0.0;
  for (double r : rec.residuals) max_res = std::max(max_res, r);
  std::string out = csv_field(identities::identity_name(rec.kase.id));
  out += "," + format_double(rec.kase.alpha);
  out += "," + format_double(rec.kase.z.real());
  out += "," + format_double(rec.kase.z.imag());
  out += "," + (case_uses_k(rec.kase) ? std::to_string(rec.kase.k) : "");
  out += "," + (case_uses_q(rec.kase) ? std::to_string(rec.kase.q) : "");
  out += "," + std::to_string(rec.sides.size());
  out += "," + format_double(max_res);
  out += rec.passed ? ",true" : ",false";
  out += "," + format_double(rec.wall_ms);
  return out;
}

std::string table_csv_header(bool with_golden) {
  if (with_golden) return "k,alpha,lhs,rhs,lhs_ref,rhs_ref,match";
  return "k,alpha,lhs,rhs";
}

std::string table_csv_row(const asympt::Table1Cell& cell) {
  return std::to_string(cell.k) + "," + format_double(cell.alpha) + "," +
         format_double(cell.lhs) + "," + format_double(cell.rhs);
}

std::string table_csv_row(const asympt::Table1Cell& cell,
                          const asympt::Table1Golden& golden, bool lhs_ok,
                          bool rhs_ok) {
  return table_csv_row(cell) + "," + format_double(golden.lhs) + "," +
         format_double(golden.rhs) + "," +
         (lhs_ok && rhs_ok ? "true" : "false");
}

std::string table_json(const std::vector<asympt::Table1Cell>& cells) {
  std::string out = "[";
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) out += ',';
    out += "{\"k\":" + std::to_string(cells[i].k);
    out += ",\"alpha\":" + format_double(cells[i].alpha);
    out += ",\"lhs\":" + format_double(cells[i].lhs);
    out += ",\"rhs\":" + format_double(cells[i].rhs);
    out += "}";
  }
  out += "]";
  return out;
}

}  // namespace mordell::io
