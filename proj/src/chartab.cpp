#include "brauer/chartab.hpp"

#include <cmath>
#include <cstdlib>

namespace brauer {

namespace {

constexpr double kTol = 1e-6;

bool near_integer(double x) { return std::abs(x - std::round(x)) <= kTol; }

}  // namespace

void CharacterTable::validate() const {
  if (order < 1 || classes.empty()) {
    throw Error(ErrorCode::SizeSumMismatch,
                "a table needs a positive order and at least one class");
  }
  long long total = 0;
  for (const ConjugacyClass& c : classes) {
    if (c.size < 1) {
      throw Error(ErrorCode::SizeSumMismatch,
                  "class " + c.name + " has non-positive size");
    }
    total += c.size;
  }
  if (total != order) {
    throw Error(ErrorCode::SizeSumMismatch,
                "class sizes sum to " + std::to_string(total) +
                    ", expected " + std::to_string(order));
  }
  const int n = static_cast<int>(classes.size());
  for (const ConjugacyClass& c : classes) {
    if (c.square < 0 || c.square >= n) {
      throw Error(ErrorCode::BadSquareMap,
                  "class " + c.name + " squares to out-of-range index " +
                      std::to_string(c.square));
    }
  }
  for (const CharacterRow& row : characters) {
    if (static_cast<int>(row.values.size()) != n) {
      throw FormatError("character " + row.name + " has " +
                        std::to_string(row.values.size()) +
                        " values for " + std::to_string(n) + " classes");
    }
  }
  identity_class();
}

int CharacterTable::identity_class() const {
  int found = -1;
  for (int k = 0; k < static_cast<int>(classes.size()); ++k) {
    if (classes[k].size == 1 && classes[k].square == k) {
      found = k;
      break;
    }
  }
  if (found < 0) {
    throw Error(ErrorCode::NoIdentityClass,
                "no class of size one is fixed by squaring");
  }
  for (const CharacterRow& row : characters) {
    std::complex<double> degree = row.values.at(found);
    if (std::abs(degree.imag()) > kTol || !near_integer(degree.real()) ||
        std::round(degree.real()) < 1) {
      throw Error(ErrorCode::NoIdentityClass,
                  "character " + row.name +
                      " lacks a positive integer degree at the identity");
    }
  }
  return found;
}

const CharacterRow& CharacterTable::character(const std::string& name) const {
  for (const CharacterRow& row : characters) {
    if (row.name == name) return row;
  }
  throw FormatError("no character named " + name + " in the table");
}

namespace {

int snap(std::complex<double> sum, long long order, const std::string& what) {
  std::complex<double> value = sum / static_cast<double>(order);
  if (std::abs(value.imag()) > kTol || !near_integer(value.real())) {
    throw Error(ErrorCode::NumericallyUnstable,
                what + " does not land on an integer within tolerance");
  }
  return static_cast<int>(std::llround(value.real()));
}

}  // namespace

int fs_indicator(const CharacterTable& t, const CharacterRow& chi) {
  t.validate();
  std::complex<double> sum = 0.0;
  for (size_t k = 0; k < t.classes.size(); ++k) {
    sum += static_cast<double>(t.classes[k].size) *
           chi.values.at(t.classes[k].square);
  }
  int value = snap(sum, t.order, "indicator of " + chi.name);
  if (value < -1 || value > 1) {
    throw Error(ErrorCode::NumericallyUnstable,
                "indicator of " + chi.name + " is " + std::to_string(value) +
                    ", outside {-1, 0, 1}");
  }
  return value;
}

TwistedIndicator twisted_indicator(const CharacterTable& t,
                                   const CharacterRow& mu,
                                   const CharacterRow& chi) {
  t.validate();
  const int identity = t.identity_class();
  if (std::abs(mu.values.at(identity) - std::complex<double>(1.0)) > kTol) {
    throw Error(ErrorCode::NotLinear,
                "twisting character " + mu.name + " must have degree one");
  }
  TwistedIndicator result;
  std::complex<double> sum = 0.0;
  for (size_t k = 0; k < t.classes.size(); ++k) {
    sum += static_cast<double>(t.classes[k].size) * mu.values[k] *
           chi.values.at(t.classes[k].square);
    if (std::abs(std::conj(chi.values[k]) - mu.values[k] * chi.values[k]) >
        kTol) {
      result.duality_mismatch = true;
    }
  }
  result.value =
      snap(sum, t.order, "twisted indicator of " + chi.name + " by " + mu.name);
  return result;
}

}  // namespace brauer
