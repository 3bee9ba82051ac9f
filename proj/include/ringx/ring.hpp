#pragma once
// Multiplicity vectors on an anonymous, unoriented ring: rotations, mirrors,
// canonical forms, sensor views, and block/group structure.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace ringx {

using Mult = std::uint8_t;

// Global directions.  CW moves toward increasing node index, CCW toward
// decreasing.  The indices are internal bookkeeping; robots never see them.
enum class Dir : std::uint8_t { CW, CCW };

inline Dir opposite(Dir d) { return d == Dir::CW ? Dir::CCW : Dir::CW; }
inline int dir_delta(Dir d) { return d == Dir::CW ? 1 : -1; }
const char* to_string(Dir d);

class Configuration {
 public:
  Configuration() = default;  // empty placeholder; real configs have n >= 1
  explicit Configuration(const std::vector<int>& mults);
  static Configuration parse(const std::string& text);  // "1,1,0,2"

  int n() const { return static_cast<int>(mults_.size()); }
  int robots() const;
  int index(int node) const;  // positive value of node mod n
  int at(int node) const { return mults_[index(node)]; }
  bool occupied(int node) const { return at(node) > 0; }

  Configuration rotated(int offset) const;  // result[j] = this[(j+offset) mod n]
  Configuration mirrored() const;           // reversal fixing index 0
  // Lexicographic minimum over all rotations of the word and of its mirror;
  // equal canonical forms <=> indistinguishable configurations.
  Configuration canonical() const;
  bool towerless() const;

  std::string str() const;
  const std::vector<Mult>& mults() const { return mults_; }

  friend bool operator==(const Configuration&, const Configuration&) = default;
  friend bool operator<(const Configuration& a, const Configuration& b) {
    return a.mults_ < b.mults_;
  }

 private:
  std::vector<Mult> mults_;
};

// Equal up to rotation and/or mirror.  Throws on different ring sizes.
bool indistinguishable(const Configuration& a, const Configuration& b);

// A sensor window x_{-phi}..x_{+phi}.  Delivered without orientation: the
// robot cannot tell this reading from its reversal.
struct View {
  std::vector<Mult> window;

  int phi() const { return (static_cast<int>(window.size()) - 1) / 2; }
  Mult center() const { return window[window.size() / 2]; }
  bool symmetric() const;
  View reversed() const;
  std::string str() const;  // "2,2,(1),0,0"

  friend bool operator==(const View&, const View&) = default;
};

// Window centered at `node`, read in the ring's internal CW orientation.
// Windows longer than the ring wrap and repeat nodes.  Throws on an empty
// node ("view at empty node").
View view_at(const Configuration& c, int node, int phi);

enum class BlockKind : std::uint8_t {
  ExactDistance,  // consecutive occupied nodes exactly d apart (d.block)
  Group           // consecutive gaps <= d (phi.group when d = phi)
};

struct Block {
  int start = 0;   // first occupied node, CW order
  int last = 0;    // last occupied node (== border at the far end)
  int nodes = 0;   // occupied nodes in the run
  int robots = 0;  // robots in the run, towers counted with multiplicity
};

struct BlockReport {
  BlockKind kind = BlockKind::ExactDistance;
  int distance = 1;
  std::vector<Block> blocks;
  std::vector<int> isolated;  // occupied nodes in no block (ExactDistance only)
  // The run covers the whole ring cyclically; one block anchored at the
  // smallest occupied index, borders undefined.
  bool cyclic = false;
};

// Maximal runs of occupied nodes joined by gaps == d (ExactDistance) or
// gaps <= d (Group).  Group mode puts every occupied node in some block
// (possibly of size 1); ExactDistance reports lone nodes as isolated.
BlockReport structure(const Configuration& c, int d, BlockKind kind);

// Minimum distance between two distinct robots; 0 if a tower exists.
int inter_distance(const Configuration& c);

}  // namespace ringx
