#include "hlf/twist_words.hpp"

#include <cctype>
#include <fstream>

#include "hlf/errors.hpp"
#include "hlf/invariants.hpp"

namespace hlf {

TwistWord parse_word(int g, const std::string& text) {
  if (g < 1) fail(errc::invalid_genus, "word genus must be >= 1, got " + std::to_string(g));
  TwistWord w;
  w.g = g;
  const i64 max_h = g / 2;
  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    const std::string tok = text.substr(start, i - start);
    if (tok == "N") {
      w.tokens.push_back({TwistToken::Kind::Nonsep, 0});
      continue;
    }
    if (tok.size() >= 2 && tok[0] == 'S') {
      bool digits = true;
      for (std::size_t j = 1; j < tok.size(); ++j) {
        if (!std::isdigit(static_cast<unsigned char>(tok[j]))) {
          digits = false;
          break;
        }
      }
      if (digits) {
        i64 h = 0;
        for (std::size_t j = 1; j < tok.size(); ++j) {
          h = checked_add(checked_mul(h, 10), tok[j] - '0');
          if (h > (i64(1) << 32)) fail(errc::resource, "separating type out of checked range");
        }
        if (h < 1 || h > max_h) {
          fail(errc::semantic, "separating type " + std::to_string(h) +
                                   " outside 1..floor(g/2) = " + std::to_string(max_h) +
                                   " at genus " + std::to_string(g));
        }
        w.tokens.push_back({TwistToken::Kind::Sep, h});
        continue;
      }
    }
    throw parse_error("unknown token \"" + tok + "\" at offset " + std::to_string(start), start);
  }
  return w;
}

FiberTypeVector to_fiber_vector(const TwistWord& w) {
  if (w.tokens.empty()) fail(errc::invalid_vector, "empty word has no fibration");
  i64 n = 0;
  std::vector<i64> s(static_cast<std::size_t>(w.g / 2), 0);
  for (const TwistToken& t : w.tokens) {
    if (t.kind == TwistToken::Kind::Nonsep) {
      n = checked_add(n, 1);
    } else {
      s[static_cast<std::size_t>(t.h - 1)] = checked_add(s[static_cast<std::size_t>(t.h - 1)], 1);
    }
  }
  return FiberTypeVector(w.g, n, std::move(s));
}

i64 h1_order(int g, McgGroup group) {
  if (g < 1) fail(errc::invalid_genus, "h1_order needs genus >= 1, got " + std::to_string(g));
  if (group == McgGroup::Full) {
    if (g == 1) return 12;
    if (g == 2) return 10;
    return 1;
  }
  return modulus(g);
}

i64 abelianization_image(const TwistWord& w) {
  const i64 m = h1_order(w.g, McgGroup::Hyperelliptic);
  i64 acc = 0;
  for (const TwistToken& t : w.tokens) {
    const i64 inc = (t.kind == TwistToken::Kind::Nonsep) ? 1 : separating_weight(t.h);
    acc = mod_floor(checked_add(acc, mod_floor(inc, m)), m);
  }
  return acc;
}

std::vector<std::pair<std::size_t, TwistWord>> read_word_file(int g, const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(errc::usage, "cannot open word file: " + path);
  std::vector<std::pair<std::size_t, TwistWord>> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    try {
      TwistWord w = parse_word(g, line);
      if (w.tokens.empty()) continue;
      out.emplace_back(lineno, std::move(w));
    } catch (const parse_error& e) {
      throw parse_error("line " + std::to_string(lineno) + ": " + e.what(), e.offset());
    } catch (const error& e) {
      throw error(e.kind(), "line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return out;
}

}  // namespace hlf
