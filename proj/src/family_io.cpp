#include "tinter/family_io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>

namespace tinter {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  const std::string body = trim(text);
  if (body.empty()) return out;
  std::size_t pos = 0;
  while (true) {
    const auto comma = body.find(',', pos);
    const std::string tok = trim(body.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos));
    int value = 0;
    const auto* first = tok.data();
    const auto* last = tok.data() + tok.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (tok.empty() || ec != std::errc{} || ptr != last)
      throw InvalidParameters("malformed integer list: '" + text + "'");
    out.push_back(value);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

std::string format_int_list(const std::vector<int>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(values[i]);
  }
  return out;
}

Family read_family(std::istream& in) {
  std::string line;
  std::optional<PartitionedGroundSet> ground;
  std::vector<Subset> members;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty() && line.front() == '#') continue;
    if (!ground) {
      const std::string t = trim(line);
      if (t.empty()) continue;
      if (t.rfind("ground:", 0) != 0)
        throw InvalidParameters("line " + std::to_string(lineno) + ": expected 'ground: n_1,...,n_p' header");
      ground.emplace(parse_int_list(t.substr(7)));
      continue;
    }
    const auto elems = parse_int_list(line);
    for (std::size_t i = 1; i < elems.size(); ++i)
      if (elems[i] <= elems[i - 1])
        throw InvalidParameters("line " + std::to_string(lineno) + ": elements must be strictly ascending");
    for (int e : elems)
      if (e < 1 || e > ground->n())
        throw InvalidParameters("line " + std::to_string(lineno) + ": element " + std::to_string(e) +
                                " outside ground set");
    members.emplace_back(std::span<const int>(elems));
  }
  if (!ground) throw InvalidParameters("family file has no 'ground:' header");
  return Family(std::move(*ground), std::move(members));
}

Family read_family_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidParameters("cannot open family file " + path);
  return read_family(in);
}

void write_family(std::ostream& out, const Family& family) {
  out << "ground: " << format_int_list(family.ground().sizes()) << '\n';
  for (const auto& m : family) out << format_int_list(m.elements()) << '\n';
}

void write_family_file(const std::string& path, const Family& family) {
  std::ofstream out(path);
  if (!out) throw InvalidParameters("cannot write family file " + path);
  write_family(out, family);
}

std::string format_family(const Family& family) {
  std::ostringstream os;
  write_family(os, family);
  return os.str();
}

}  // namespace tinter
