#include "hallmark/group_file.hpp"

#include <algorithm>
#include <sstream>

namespace hallmark::io {

namespace {

std::string strip(const std::string& line) {
  std::string s = line.substr(0, line.find('#'));
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

}  // namespace

GroupFileData parse_group_file(std::istream& in) {
  GroupFileData data;
  bool have_degree = false;
  std::string line;
  while (std::getline(in, line)) {
    std::string s = strip(line);
    if (s.empty()) continue;
    if (s.rfind("degree", 0) == 0) {
      if (have_degree) throw FormatError("group file: duplicate degree line");
      std::istringstream is(s.substr(6));
      long d = 0;
      if (!(is >> d) || d < 1 || d > 60000)
        throw FormatError("group file: bad degree line: " + s);
      data.degree = static_cast<unsigned>(d);
      have_degree = true;
    } else if (s.rfind("gen", 0) == 0) {
      if (!have_degree) throw FormatError("group file: degree line must come first");
      data.generators.push_back(Perm::from_cycles(data.degree, s.substr(3)));
    } else {
      throw FormatError("group file: unrecognized line: " + s);
    }
  }
  if (!have_degree) throw FormatError("group file: missing degree line");
  return data;
}

GroupFileData parse_group_file_text(const std::string& text) {
  std::istringstream is(text);
  return parse_group_file(is);
}

std::string export_group_file(unsigned degree, const std::vector<Perm>& generators) {
  std::ostringstream os;
  os << "degree " << degree << '\n';
  for (const Perm& g : generators) os << "gen " << g.to_cycles() << '\n';
  return os.str();
}

std::vector<catalog::SimpleGroupId> parse_factor_list(const std::string& text) {
  std::vector<catalog::SimpleGroupId> out;
  // Split on commas that are not inside parentheses.
  std::string token;
  int depth = 0;
  auto flush = [&] {
    std::string t;
    for (char c : token) {
      if (!std::isspace(static_cast<unsigned char>(c))) t += c;
    }
    if (!t.empty()) out.push_back(catalog::SimpleGroupId::parse(t));
    token.clear();
  };
  for (char c : text) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      flush();
    } else {
      token += c;
    }
  }
  flush();
  if (out.empty()) throw FormatError("factor list: no factors given");
  return out;
}

arith::PrimeSet parse_prime_set(const std::string& text) {
  std::vector<arith::Int> primes;
  std::string token;
  auto flush = [&] {
    if (token.empty()) return;
    try {
      primes.push_back(std::stoll(token));
    } catch (const std::exception&) {
      throw FormatError("prime set: bad number: " + token);
    }
    token.clear();
  };
  for (char c : text) {
    if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
      flush();
    } else {
      token += c;
    }
  }
  flush();
  if (primes.empty()) throw FormatError("prime set: empty");
  try {
    return arith::PrimeSet(std::move(primes));
  } catch (const DomainError& e) {
    throw FormatError(std::string("prime set: ") + e.what());
  }
}

}  // namespace hallmark::io
