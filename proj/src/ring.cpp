#include "ringx/ring.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace ringx {

const char* to_string(Dir d) { return d == Dir::CW ? "cw" : "ccw"; }

Configuration::Configuration(const std::vector<int>& mults) {
  if (mults.empty()) throw std::invalid_argument("configuration needs n >= 1");
  mults_.reserve(mults.size());
  for (int m : mults) {
    if (m < 0 || m > 255) throw std::invalid_argument("multiplicity out of range");
    mults_.push_back(static_cast<Mult>(m));
  }
}

Configuration Configuration::parse(const std::string& text) {
  std::vector<int> out;
  std::string tok;
  std::istringstream in(text);
  while (std::getline(in, tok, ',')) {
    size_t a = tok.find_first_not_of(" \t");
    size_t b = tok.find_last_not_of(" \t");
    if (a == std::string::npos) throw std::invalid_argument("empty multiplicity in: " + text);
    out.push_back(std::stoi(tok.substr(a, b - a + 1)));
  }
  return Configuration(out);
}

int Configuration::robots() const {
  return std::accumulate(mults_.begin(), mults_.end(), 0);
}

int Configuration::index(int node) const {
  int n = static_cast<int>(mults_.size());
  int r = node % n;
  return r < 0 ? r + n : r;
}

Configuration Configuration::rotated(int offset) const {
  Configuration r;
  r.mults_.resize(mults_.size());
  for (int j = 0; j < n(); ++j) r.mults_[j] = mults_[index(j + offset)];
  return r;
}

Configuration Configuration::mirrored() const {
  Configuration r;
  r.mults_.resize(mults_.size());
  for (int j = 0; j < n(); ++j) r.mults_[j] = mults_[index(-j)];
  return r;
}

Configuration Configuration::canonical() const {
  Configuration best = *this;
  Configuration mir = mirrored();
  for (int i = 0; i < n(); ++i) {
    Configuration a = rotated(i);
    Configuration b = mir.rotated(i);
    if (a.mults_ < best.mults_) best = a;
    if (b.mults_ < best.mults_) best = b;
  }
  return best;
}

bool Configuration::towerless() const {
  return std::all_of(mults_.begin(), mults_.end(), [](Mult m) { return m <= 1; });
}

std::string Configuration::str() const {
  std::string s;
  for (int j = 0; j < n(); ++j) {
    if (j) s += ',';
    s += std::to_string(static_cast<int>(mults_[j]));
  }
  return s;
}

bool indistinguishable(const Configuration& a, const Configuration& b) {
  if (a.n() != b.n()) throw std::invalid_argument("incomparable ring sizes");
  return a.canonical() == b.canonical();
}

bool View::symmetric() const {
  int p = phi();
  for (int i = 1; i <= p; ++i)
    if (window[p + i] != window[p - i]) return false;
  return true;
}

View View::reversed() const {
  View r = *this;
  std::reverse(r.window.begin(), r.window.end());
  return r;
}

std::string View::str() const {
  std::string s;
  int p = phi();
  for (int i = 0; i < static_cast<int>(window.size()); ++i) {
    if (i) s += ',';
    if (i == p) s += '(';
    s += std::to_string(static_cast<int>(window[i]));
    if (i == p) s += ')';
  }
  return s;
}

View view_at(const Configuration& c, int node, int phi) {
  if (phi < 0) throw std::invalid_argument("negative radius");
  if (!c.occupied(node)) throw std::invalid_argument("view at empty node");
  View v;
  v.window.resize(2 * phi + 1);
  for (int i = -phi; i <= phi; ++i)
    v.window[i + phi] = static_cast<Mult>(c.at(node + i));
  return v;
}

BlockReport structure(const Configuration& c, int d, BlockKind kind) {
  if (d < 1) throw std::invalid_argument("distance must be >= 1");
  if (c.robots() == 0) throw std::invalid_argument("empty configuration");

  BlockReport rep;
  rep.kind = kind;
  rep.distance = d;

  std::vector<int> occ;
  for (int j = 0; j < c.n(); ++j)
    if (c.occupied(j)) occ.push_back(j);
  int m = static_cast<int>(occ.size());

  auto joins = [&](int gap) {
    return kind == BlockKind::ExactDistance ? gap == d : gap <= d;
  };

  if (m == 1) {
    if (kind == BlockKind::Group)
      rep.blocks.push_back({occ[0], occ[0], 1, c.at(occ[0])});
    else
      rep.isolated.push_back(occ[0]);
    return rep;
  }

  std::vector<int> gap(m);  // gap[i]: distance occ[i] -> occ[(i+1) % m]
  for (int i = 0; i < m; ++i) {
    int next = occ[(i + 1) % m];
    int g = next - occ[i];
    if (g <= 0) g += c.n();
    gap[i] = g;
  }

  int split = -1;
  for (int i = 0; i < m; ++i)
    if (!joins(gap[i])) { split = i; break; }

  if (split < 0) {
    // Every consecutive gap joins: one cyclic run over the whole robot set.
    rep.cyclic = true;
    rep.blocks.push_back({occ[0], occ[m - 1], m, c.robots()});
    return rep;
  }

  int i = (split + 1) % m;  // first node after the split starts a run
  for (int seen = 0; seen < m;) {
    int start = i;
    int nodes = 1;
    int robots = c.at(occ[i]);
    while (joins(gap[i])) {
      i = (i + 1) % m;
      ++nodes;
      robots += c.at(occ[i]);
    }
    if (nodes == 1 && kind == BlockKind::ExactDistance)
      rep.isolated.push_back(occ[start]);
    else
      rep.blocks.push_back({occ[start], occ[i], nodes, robots});
    seen += nodes;
    i = (i + 1) % m;
  }
  return rep;
}

int inter_distance(const Configuration& c) {
  if (c.robots() < 2) throw std::invalid_argument("needs two robots");
  if (!c.towerless()) return 0;
  std::vector<int> occ;
  for (int j = 0; j < c.n(); ++j)
    if (c.occupied(j)) occ.push_back(j);
  int m = static_cast<int>(occ.size());
  int best = c.n();
  for (int i = 0; i < m; ++i) {
    int g = occ[(i + 1) % m] - occ[i];
    if (g <= 0) g += c.n();
    best = std::min(best, g);
  }
  return best;
}

}  // namespace ringx
