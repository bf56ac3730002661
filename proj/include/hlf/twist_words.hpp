#pragma once

#include <string>
#include <vector>

#include "hlf/fiber_vector.hpp"

namespace hlf {

// One positive Dehn twist, identified only by the topological type of its
// curve: non-separating, or separating of type h (1 <= h <= floor(g/2)).
struct TwistToken {
  enum class Kind { Nonsep, Sep };
  Kind kind;
  i64 h = 0;  // meaningful for Sep only

  bool operator==(const TwistToken& o) const { return kind == o.kind && h == o.h; }
};

struct TwistWord {
  int g;
  std::vector<TwistToken> tokens;  // may be empty
};

enum class McgGroup { Full, Hyperelliptic };

// Grammar: word := token*, whitespace separated; token := "N" | "S" digits.
// Case-sensitive. Unknown tokens raise parse_error with the byte offset of
// the offending token; a separating type outside 1..floor(g/2) raises
// errc::semantic.
TwistWord parse_word(int g, const std::string& text);

// n = #Nonsep, s_h = #Sep(h). Empty words have no fibration.
FiberTypeVector to_fiber_vector(const TwistWord& w);

// |H1(Mod_g)| = 12, 10, 1 for g = 1, 2, >= 3; |H1(HMod_g)| = 4(2g+1) for
// odd g and 2(2g+1) for even g.
i64 h1_order(int g, McgGroup group);

// Image of the word under abelianization of HMod_g, in [0, h1_order).
// Vanishing is necessary (not sufficient) for the word to be a positive
// factorization of the identity.
i64 abelianization_image(const TwistWord& w);

// Word file: UTF-8, one word per line, '#'-prefixed comment lines ignored,
// blank lines skipped. Returns (1-based line number, word) pairs; parse
// errors are rethrown with "line L, offset B" context.
std::vector<std::pair<std::size_t, TwistWord>> read_word_file(int g, const std::string& path);

}  // namespace hlf
