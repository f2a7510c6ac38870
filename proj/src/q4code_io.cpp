#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "z4rm/code.hpp"

namespace z4rm {

namespace {

[[noreturn]] void bad_format(const std::string& what) {
  throw std::invalid_argument("Q4CODE parse error: " + what);
}

// Parses "KEY=<nonnegative int>" and returns the value.
std::size_t parse_field(std::istringstream& is, const std::string& key) {
  std::string tok;
  if (!(is >> tok)) bad_format("missing field " + key);
  if (tok.rfind(key + "=", 0) != 0) bad_format("expected " + key + "=, got '" + tok + "'");
  const std::string digits = tok.substr(key.size() + 1);
  if (digits.empty()) bad_format("empty value for " + key);
  std::size_t value = 0;
  for (char c : digits) {
    if (c < '0' || c > '9') bad_format("non-numeric value for " + key);
    value = value * 10 + static_cast<std::size_t>(c - '0');
    if (value > 1'000'000) bad_format(key + " value out of supported range");
  }
  return value;
}

}  // namespace

void write_q4code(std::ostream& os, const QuaternaryCode& code) {
  os << "Q4CODE v1\n";
  os << "N=" << code.length() << " GAMMA=" << code.gamma() << " DELTA=" << code.delta() << "\n";
  for (const auto& row : code.canonical_generators().rows()) {
    for (std::uint8_t e : row.entries()) os << static_cast<char>('0' + e);
    os << "\n";
  }
}

std::string to_q4code(const QuaternaryCode& code) {
  std::ostringstream os;
  write_q4code(os, code);
  return os.str();
}

QuaternaryCode read_q4code(std::istream& is) {
  std::string line;
  if (!std::getline(is, line)) bad_format("empty input");
  if (line == "Q4CODE v1\r") line.pop_back();
  if (line != "Q4CODE v1") bad_format("bad magic line '" + line + "'");

  if (!std::getline(is, line)) bad_format("missing header line");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  std::istringstream header(line);
  const std::size_t n = parse_field(header, "N");
  const std::size_t gamma = parse_field(header, "GAMMA");
  const std::size_t delta = parse_field(header, "DELTA");
  std::string trailing;
  if (header >> trailing) bad_format("trailing content in header: '" + trailing + "'");
  if (gamma + delta > 2 * n) bad_format("GAMMA+DELTA exceeds 2N");

  std::vector<Z4Vector> rows;
  rows.reserve(gamma + delta);
  for (std::size_t i = 0; i < gamma + delta; ++i) {
    if (!std::getline(is, line)) bad_format("expected " + std::to_string(gamma + delta) + " rows, got " +
                                            std::to_string(i));
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.size() != n) {
      bad_format("row " + std::to_string(i + 1) + " has length " + std::to_string(line.size()) +
                 ", expected " + std::to_string(n));
    }
    std::vector<std::uint8_t> entries(n);
    for (std::size_t j = 0; j < n; ++j) {
      if (line[j] < '0' || line[j] > '3') bad_format("row " + std::to_string(i + 1) + " has invalid symbol");
      entries[j] = static_cast<std::uint8_t>(line[j] - '0');
    }
    rows.emplace_back(std::move(entries));
  }
  while (std::getline(is, line)) {
    if (!line.empty() && line != "\r") bad_format("unexpected content after rows");
  }

  QuaternaryCode code = QuaternaryCode::from_rows(n, std::move(rows));
  if (code.gamma() != static_cast<int>(gamma) || code.delta() != static_cast<int>(delta)) {
    bad_format("declared type (" + std::to_string(gamma) + "," + std::to_string(delta) +
               ") does not match span type (" + std::to_string(code.gamma()) + "," +
               std::to_string(code.delta()) + ")");
  }
  return code;
}

QuaternaryCode read_q4code_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::invalid_argument("cannot open file: " + path);
  return read_q4code(is);
}

void write_q4code_file(const std::string& path, const QuaternaryCode& code) {
  std::ofstream os(path);
  if (!os) throw std::invalid_argument("cannot open file for writing: " + path);
  write_q4code(os, code);
  if (!os) throw std::runtime_error("write failed: " + path);
}

}  // namespace z4rm
