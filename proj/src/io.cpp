#include "lfwave/io.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

#include "lfwave/errors.hpp"

namespace lfw::io {

namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (true) {
    const auto next = s.find(sep, pos);
    out.push_back(s.substr(pos, next - pos));
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
  return out;
}

std::vector<std::string> tokens(std::string_view s) {
  std::istringstream in{std::string(s)};
  std::vector<std::string> out;
  std::string t;
  while (in >> t) out.push_back(t);
  return out;
}

[[noreturn]] void fail(std::size_t line, const std::string& what) {
  throw ParseError("line " + std::to_string(line) + ": " + what);
}

double parse_real(std::string_view text, std::size_t line) {
  const std::string s(trim(text));
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (s.empty() || end != s.c_str() + s.size()) fail(line, "bad number '" + s + "'");
  return v;
}

int parse_int(std::string_view text, std::size_t line) {
  const std::string s(trim(text));
  char* end = nullptr;
  const long v = std::strtol(s.c_str(), &end, 10);
  if (s.empty() || end != s.c_str() + s.size()) fail(line, "bad integer '" + s + "'");
  return static_cast<int>(v);
}

GFElement parse_digits(const GaloisField& field, std::string_view text, std::size_t line) {
  try {
    return parse_gf_element(field, text);
  } catch (const ParseError& e) {
    fail(line, e.what());
  }
}

std::string join_tuple(const std::vector<GFElement>& tuple) {
  std::string out;
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    if (i) out += ';';
    out += to_string(tuple[i]);
  }
  return out;
}

// Reads lines, skipping blank ones; records 1-based line numbers.
std::vector<std::pair<std::size_t, std::string>> content_lines(std::istream& in) {
  std::vector<std::pair<std::size_t, std::string>> out;
  std::string line;
  std::size_t n = 0;
  while (std::getline(in, line)) {
    ++n;
    if (!trim(line).empty()) out.emplace_back(n, line);
  }
  return out;
}

// "# key=value key=value ..."
std::map<std::string, std::string> parse_meta(std::string_view line, std::size_t n) {
  line = trim(line);
  if (line.empty() || line.front() != '#') fail(n, "expected '# key=value ...' header");
  std::map<std::string, std::string> meta;
  for (const auto& tok : tokens(line.substr(1))) {
    const auto eq = tok.find('=');
    if (eq == std::string::npos) fail(n, "bad header field '" + tok + "'");
    meta[tok.substr(0, eq)] = tok.substr(eq + 1);
  }
  return meta;
}

int meta_int(const std::map<std::string, std::string>& meta, const std::string& key, std::size_t n) {
  const auto it = meta.find(key);
  if (it == meta.end()) fail(n, "header lacks '" + key + "'");
  return parse_int(it->second, n);
}

GaloisField field_or_fail(int p, int s, std::size_t n) {
  try {
    return GaloisField(p, s);
  } catch (const Error& e) {
    fail(n, e.what());
  }
}

template <Domain D>
void write_step_impl(std::ostream& out, const BasicStepFunction<D>& f, const char* domain) {
  out << "# p=" << f.field().p() << " s=" << f.field().s() << " N=" << f.window().N << " M=" << f.window().M
      << " domain=" << domain << '\n';
  out << "digits,re,im\n";
  for (std::size_t i = 0; i < f.size(); ++i)
    out << join_tuple(f.tuple_of(i)) << ',' << format_double(f[i].real()) << ',' << format_double(f[i].imag()) << '\n';
}

template <Domain D>
BasicStepFunction<D> read_step_impl(std::istream& in, const char* domain) {
  const auto lines = content_lines(in);
  if (lines.size() < 2) throw ParseError("step CSV needs a header and a column line");
  const auto meta = parse_meta(lines[0].second, lines[0].first);
  const auto dom = meta.find("domain");
  if (dom == meta.end() || dom->second != domain) fail(lines[0].first, std::string("expected domain=") + domain);
  const GaloisField field =
      field_or_fail(meta_int(meta, "p", lines[0].first), meta_int(meta, "s", lines[0].first), lines[0].first);
  Window w{meta_int(meta, "N", lines[0].first), meta_int(meta, "M", lines[0].first)};
  BasicStepFunction<D> f = [&] {
    try {
      return BasicStepFunction<D>(field, w);
    } catch (const Error& e) {
      fail(lines[0].first, e.what());
    }
  }();
  if (lines.size() - 2 != f.size())
    throw ParseError("expected " + std::to_string(f.size()) + " data lines, found " + std::to_string(lines.size() - 2));
  std::vector<bool> seen(f.size(), false);
  for (std::size_t r = 2; r < lines.size(); ++r) {
    const auto [n, text] = lines[r];
    const auto cols = split(text, ',');
    if (cols.size() != 3) fail(n, "expected 'digits,re,im'");
    std::vector<GFElement> tuple;
    if (w.levels() > 0)
      for (auto seg : split(cols[0], ';')) tuple.push_back(parse_digits(field, seg, n));
    if (tuple.size() != static_cast<std::size_t>(w.levels())) fail(n, "wrong number of digit tuples");
    const std::size_t idx = f.index_of(tuple);
    if (seen[idx]) fail(n, "duplicate cell");
    seen[idx] = true;
    f[idx] = cplx{parse_real(cols[1], n), parse_real(cols[2], n)};
  }
  return f;
}

}  // namespace

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.16e", x);
  return buf;
}

void write_mask(std::ostream& out, const Mask& m) {
  const std::size_t q = m.field().order();
  out << m.field().p() << ' ' << m.field().s() << ' ' << m.N() << '\n';
  for (std::size_t prefix = 0; prefix < m.prefix_count(); ++prefix) {
    auto tuple = m.prefix_tuple(prefix);
    tuple.push_back(m.field().zero());
    for (std::size_t a0 = 0; a0 < q; ++a0) {
      tuple.back() = m.field().from_index(a0);
      const cplx v = m(prefix, a0);
      out << join_tuple(tuple) << ' ' << format_double(v.real()) << ' ' << format_double(v.imag()) << '\n';
    }
  }
}

Mask read_mask(std::istream& in) {
  const auto lines = content_lines(in);
  if (lines.empty()) throw ParseError("empty mask file");
  const auto header = tokens(lines[0].second);
  if (header.size() != 3) fail(lines[0].first, "expected header 'p s N'");
  const int p = parse_int(header[0], lines[0].first);
  const int s = parse_int(header[1], lines[0].first);
  const int N = parse_int(header[2], lines[0].first);
  if (N < 0) fail(lines[0].first, "N must be >= 0");
  const GaloisField field = field_or_fail(p, s, lines[0].first);
  Mask m(field, N);
  if (lines.size() - 1 != m.size())
    throw ParseError("mask file has " + std::to_string(lines.size() - 1) + " data lines, expected " +
                     std::to_string(m.size()) + " (p^(s(N+1)))");
  std::vector<bool> seen(m.size(), false);
  for (std::size_t r = 1; r < lines.size(); ++r) {
    const auto [n, text] = lines[r];
    const auto segs = split(text, ';');
    if (segs.size() != static_cast<std::size_t>(N) + 1)
      fail(n, "expected " + std::to_string(N + 1) + " semicolon-separated digit tuples");
    std::size_t flat = 0;
    for (std::size_t i = 0; i + 1 < segs.size(); ++i) flat = flat * field.order() + field.index(parse_digits(field, segs[i], n));
    const auto last = tokens(segs.back());
    if (last.size() != static_cast<std::size_t>(s) + 2) fail(n, "expected the a_0 digits followed by 're im'");
    std::string a0_text;
    for (int l = 0; l < s; ++l) a0_text += last[static_cast<std::size_t>(l)] + ' ';
    flat = flat * field.order() + field.index(parse_digits(field, a0_text, n));
    if (seen[flat]) fail(n, "duplicate index tuple");
    seen[flat] = true;
    m.values()[flat] = cplx{parse_real(last[static_cast<std::size_t>(s)], n), parse_real(last[static_cast<std::size_t>(s) + 1], n)};
  }
  return m;
}

void write_step_csv(std::ostream& out, const StepFunction& f) { write_step_impl(out, f, "time"); }
void write_step_csv(std::ostream& out, const DualStepFunction& g) { write_step_impl(out, g, "frequency"); }
StepFunction read_step_csv(std::istream& in) { return read_step_impl<Domain::time>(in, "time"); }
DualStepFunction read_dual_step_csv(std::istream& in) { return read_step_impl<Domain::frequency>(in, "frequency"); }

void write_coefficients_csv(std::ostream& out, const RefinementCoefficients& beta) {
  const LocalField lf(beta.field());
  const int depth = beta.N() + 1;
  out << "# p=" << beta.field().p() << " s=" << beta.field().s() << " N=" << beta.N() << '\n';
  out << "h,re,im\n";
  for (std::size_t i = 0; i < beta.size(); ++i) {
    const LaurentElement h = lf.shift_from_index(depth, i);
    std::vector<GFElement> tuple;
    for (int k = -depth; k < 0; ++k) tuple.push_back(lf.digit(h, k));
    out << join_tuple(tuple) << ',' << format_double(beta[i].real()) << ',' << format_double(beta[i].imag()) << '\n';
  }
}

RefinementCoefficients read_coefficients_csv(std::istream& in) {
  const auto lines = content_lines(in);
  if (lines.size() < 2) throw ParseError("coefficient CSV needs a header and a column line");
  const auto meta = parse_meta(lines[0].second, lines[0].first);
  const GaloisField field =
      field_or_fail(meta_int(meta, "p", lines[0].first), meta_int(meta, "s", lines[0].first), lines[0].first);
  const int N = meta_int(meta, "N", lines[0].first);
  if (N < 0) fail(lines[0].first, "N must be >= 0");
  RefinementCoefficients beta(field, N);
  if (lines.size() - 2 != beta.size())
    throw ParseError("expected " + std::to_string(beta.size()) + " data lines, found " + std::to_string(lines.size() - 2));
  std::vector<bool> seen(beta.size(), false);
  for (std::size_t r = 2; r < lines.size(); ++r) {
    const auto [n, text] = lines[r];
    const auto cols = split(text, ',');
    if (cols.size() != 3) fail(n, "expected 'h,re,im'");
    const auto segs = split(cols[0], ';');
    if (segs.size() != static_cast<std::size_t>(N) + 1) fail(n, "wrong number of digit tuples");
    // Digits are listed from index -(N+1) upward; index -1 is least significant.
    std::size_t flat = 0;
    for (auto seg : segs) flat = flat * field.order() + field.index(parse_digits(field, seg, n));
    if (seen[flat]) fail(n, "duplicate shift");
    seen[flat] = true;
    beta[flat] = cplx{parse_real(cols[1], n), parse_real(cols[2], n)};
  }
  return beta;
}

void write_report(std::ostream& out, const Report& report) {
  for (const auto& [k, v] : report) out << k << " = " << v << '\n';
}

Report read_report(std::istream& in) {
  Report report;
  for (const auto& [n, text] : content_lines(in)) {
    const auto eq = text.find(" = ");
    if (eq == std::string::npos) fail(n, "expected 'key = value'");
    report.emplace_back(std::string(trim(std::string_view(text).substr(0, eq))),
                        std::string(trim(std::string_view(text).substr(eq + 3))));
  }
  return report;
}

const std::string& report_value(const Report& report, const std::string& key) {
  for (const auto& [k, v] : report)
    if (k == key) return v;
  throw ParseError("report has no key '" + key + "'");
}

Mask load_mask(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  return read_mask(in);
}

void save(const std::filesystem::path& path, const std::function<void(std::ostream&)>& writer) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path.string());
  writer(out);
  out.flush();
  if (!out) throw IoError("write failed for " + path.string());
}

}  // namespace lfw::io
