#include "metacyclic.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <numbers>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

namespace brauer::testsupport {

namespace {

using Elt = std::pair<int, int>;  // r^i t^k as (i, k)
using Complex = std::complex<double>;

int mod(int x, int n) { return ((x % n) + n) % n; }

Complex root_of_unity(int num, int den) {
  const double angle = 2.0 * std::numbers::pi * num / den;
  return {std::cos(angle), std::sin(angle)};
}

std::string element_name(int i, int k) {
  if (i == 0 && k == 0) return "1";
  std::string name;
  if (i > 0) name += i == 1 ? "r" : "r" + std::to_string(i);
  if (k > 0) name += k == 1 ? "t" : "t" + std::to_string(k);
  return name;
}

struct Group {
  int a;
  int b;
  std::vector<int> spow;  // s^k mod a for k in 0..b

  Elt mul(Elt x, Elt y) const {
    return {mod(x.first + y.first * spow[x.second], a),
            mod(x.second + y.second, b)};
  }
  Elt inv(Elt x) const {
    int k = mod(-x.second, b);
    return {mod(-x.first * spow[k], a), k};
  }
  std::vector<Elt> elements() const {
    std::vector<Elt> all;
    for (int i = 0; i < a; ++i) {
      for (int k = 0; k < b; ++k) all.push_back({i, k});
    }
    return all;
  }
};

void require(bool ok, const std::string& what) {
  if (!ok) throw std::logic_error("metacyclic oracle: " + what);
}

}  // namespace

CharacterTable metacyclic_table(int a, int b, int s) {
  require(a >= 1 && b >= 1, "a and b must be positive");
  Group g{a, b, {}};
  g.spow.resize(b + 1);
  g.spow[0] = mod(1, a);
  for (int k = 1; k <= b; ++k) g.spow[k] = mod(g.spow[k - 1] * s, a);
  require(g.spow[b] == mod(1, a), "s^b must be 1 mod a");

  const std::vector<Elt> all = g.elements();
  const int n = a * b;

  // Conjugacy classes, each sorted and led by its (k, i)-minimal member.
  std::map<Elt, int> class_of;
  std::vector<std::vector<Elt>> classes;
  auto flip = [](Elt x) { return std::pair{x.second, x.first}; };
  for (const Elt& x : all) {
    if (class_of.count(x)) continue;
    std::set<Elt> orbit;
    for (const Elt& y : all) orbit.insert(g.mul(g.mul(y, x), g.inv(y)));
    std::vector<Elt> members(orbit.begin(), orbit.end());
    std::sort(members.begin(), members.end(),
              [&](Elt u, Elt v) { return flip(u) < flip(v); });
    for (const Elt& m : members) class_of[m] = static_cast<int>(classes.size());
    classes.push_back(std::move(members));
  }
  std::sort(classes.begin(), classes.end(), [&](const auto& u, const auto& v) {
    return flip(u.front()) < flip(v.front());
  });
  class_of.clear();
  for (int c = 0; c < static_cast<int>(classes.size()); ++c) {
    for (const Elt& m : classes[c]) class_of[m] = c;
  }

  CharacterTable table;
  table.order = n;
  for (const auto& members : classes) {
    ConjugacyClass cls;
    cls.name = element_name(members.front().first, members.front().second);
    cls.size = static_cast<long long>(members.size());
    int sq = class_of.at(g.mul(members.front(), members.front()));
    for (const Elt& m : members) {
      require(class_of.at(g.mul(m, m)) == sq,
              "squaring must be constant on classes");
    }
    cls.square = sq;
    table.classes.push_back(std::move(cls));
  }

  // Orbits of multiplication by s on the characters of ⟨r⟩.
  std::vector<bool> seen(a, false);
  struct Seed {
    int j;  // orbit representative
    int d;  // orbit length = character degree
    int u;  // extension index, 0 .. b/d − 1
  };
  std::vector<Seed> seeds;
  for (int j = 0; j < a; ++j) {
    if (seen[j]) continue;
    int d = 1;
    int image = mod(j * s, a);
    seen[j] = true;
    while (image != j) {
      seen[image] = true;
      image = mod(image * s, a);
      ++d;
    }
    require(b % d == 0, "orbit length must divide b");
    for (int u = 0; u < b / d; ++u) seeds.push_back({j, d, u});
  }
  std::sort(seeds.begin(), seeds.end(), [](const Seed& x, const Seed& y) {
    return std::tie(x.d, x.j, x.u) < std::tie(y.d, y.j, y.u);
  });

  for (const Seed& seed : seeds) {
    // Extension of the ⟨r⟩-character r ↦ ζ_a^j to its stabilizer
    // H = { r^i t^k : d | k }, then induction up to G.
    const int sub = b / seed.d;
    const long long stab_order = static_cast<long long>(a) * sub;
    CharacterRow row;
    for (const auto& members : classes) {
      Complex sum = 0.0;
      const Elt rep = members.front();
      for (const Elt& x : all) {
        Elt y = g.mul(g.mul(x, rep), g.inv(x));
        if (y.second % seed.d != 0) continue;
        sum += root_of_unity(seed.j * y.first, a) *
               root_of_unity(seed.u * (y.second / seed.d), sub);
      }
      row.values.push_back(sum / static_cast<double>(stab_order));
    }
    table.characters.push_back(std::move(row));
  }
  for (size_t r = 0; r < table.characters.size(); ++r) {
    table.characters[r].name = "X" + std::to_string(r + 1);
  }

  // Self-checks: one character per class, degrees match orbit lengths and
  // square-sum to the order, and the rows are orthonormal.
  require(table.characters.size() == classes.size(),
          "character count must equal class count");
  long long degree_sum = 0;
  for (size_t r = 0; r < seeds.size(); ++r) {
    double degree = table.characters[r].values[0].real();
    require(std::abs(degree - seeds[r].d) < 1e-9, "degree must match orbit");
    degree_sum += seeds[r].d * seeds[r].d;
  }
  require(degree_sum == n, "degree squares must sum to the order");
  for (size_t r = 0; r < table.characters.size(); ++r) {
    for (size_t q = r; q < table.characters.size(); ++q) {
      Complex inner = 0.0;
      for (size_t c = 0; c < classes.size(); ++c) {
        inner += static_cast<double>(classes[c].size()) *
                 table.characters[r].values[c] *
                 std::conj(table.characters[q].values[c]);
      }
      inner /= static_cast<double>(n);
      Complex expected = r == q ? 1.0 : 0.0;
      require(std::abs(inner - expected) < 1e-8,
              "rows must be orthonormal");
    }
  }
  table.validate();
  return table;
}

namespace {

bool row_is_real(const CharacterRow& row) {
  for (const Complex& v : row.values) {
    if (std::abs(v.imag()) > 1e-9) return false;
  }
  return true;
}

// Reorders the degree-two block of the order-120 table so that X11, X12 are
// the complex-conjugate pair, X11 carrying twisted indicator +1 against the
// linear character X3 and X12 carrying −1.
CharacterTable adjust_c15c8(CharacterTable table) {
  const CharacterRow mu = table.character("X3");
  std::vector<int> deg2;
  for (int r = 0; r < static_cast<int>(table.characters.size()); ++r) {
    if (std::abs(table.characters[r].values[0].real() - 2.0) < 1e-9) {
      deg2.push_back(r);
    }
  }
  require(deg2.size() == 4, "expected four degree-two characters");
  std::vector<int> real_rows, complex_rows;
  for (int r : deg2) {
    (row_is_real(table.characters[r]) ? real_rows : complex_rows).push_back(r);
  }
  require(real_rows.size() == 2 && complex_rows.size() == 2,
          "expected one conjugate pair of degree two");
  int plus = -1, minus = -1;
  for (int r : complex_rows) {
    TwistedIndicator ind = twisted_indicator(table, mu, table.characters[r]);
    require(!ind.duality_mismatch, "conjugate pair must be X3-twisted real");
    if (ind.value == 1) plus = r;
    if (ind.value == -1) minus = r;
  }
  require(plus >= 0 && minus >= 0 && plus != minus,
          "twisted indicators must split the pair as +1 and −1");
  std::vector<CharacterRow> rows = table.characters;
  rows[deg2[0]] = table.characters[real_rows[0]];
  rows[deg2[1]] = table.characters[real_rows[1]];
  rows[deg2[2]] = table.characters[plus];
  rows[deg2[3]] = table.characters[minus];
  table.characters = std::move(rows);
  for (size_t r = 0; r < table.characters.size(); ++r) {
    table.characters[r].name = "X" + std::to_string(r + 1);
  }
  return table;
}

}  // namespace

CharacterTable fixture_oracle(const std::string& name) {
  if (name == "c3") return metacyclic_table(3, 1, 1);
  if (name == "c5c4") return metacyclic_table(5, 4, 4);
  if (name == "c15c4") return metacyclic_table(15, 4, 2);
  if (name == "c15c8") return adjust_c15c8(metacyclic_table(15, 8, 2));
  throw std::invalid_argument("unknown fixture table: " + name);
}

}  // namespace brauer::testsupport
