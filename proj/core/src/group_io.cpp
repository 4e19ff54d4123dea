#include "orbitfold/group_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "orbitfold/error.hpp"

namespace orbitfold {

namespace {

std::string_view trim(std::string_view s) {
  const char* ws = " \t\r\n";
  auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

}  // namespace

PermutationGroup parse_group_text(std::string_view text) {
  std::size_t degree = 0;
  std::vector<Permutation> gens;
  std::size_t line_no = 0;
  while (!text.empty()) {
    auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    auto where = [&] { return "line " + std::to_string(line_no) + ": "; };
    auto space = line.find_first_of(" \t");
    std::string_view keyword = line.substr(0, space);
    std::string_view rest = space == std::string_view::npos ? "" : trim(line.substr(space));
    if (keyword == "degree") {
      if (degree != 0) throw Error(ErrorCode::Malformed, where() + "repeated degree line");
      std::size_t value = 0;
      auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), value);
      if (ec != std::errc{} || ptr != rest.data() + rest.size()) {
        throw Error(ErrorCode::Malformed, where() + "bad degree \"" + std::string(rest) + "\"");
      }
      if (value == 0 || value > kMaxDegree) {
        throw Error(ErrorCode::BadDegree, where() + "degree " + std::to_string(value));
      }
      degree = value;
    } else if (keyword == "gen") {
      if (degree == 0) throw Error(ErrorCode::Malformed, where() + "gen before degree");
      try {
        gens.push_back(parse_permutation(rest, degree));
      } catch (const Error& e) {
        throw Error(e.code(), where() + e.message());
      }
    } else {
      throw Error(ErrorCode::Malformed,
                  where() + "unknown keyword \"" + std::string(keyword) + "\"");
    }
  }
  if (degree == 0) throw Error(ErrorCode::Malformed, "missing degree line");
  return PermutationGroup(degree, std::move(gens));
}

PermutationGroup read_group_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::MissingData, "cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_group_text(buf.str());
}

std::string format_group_text(const PermutationGroup& g) {
  std::ostringstream out;
  out << "degree " << g.degree() << '\n';
  for (const auto& p : g.generators()) {
    if (!p.is_identity()) out << "gen " << p.to_cycle_string() << '\n';
  }
  return out.str();
}

}  // namespace orbitfold
