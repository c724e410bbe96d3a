#pragma once

#include <cstdint>
#include <vector>

namespace extsq {

class Parity {
 public:
  constexpr Parity() = default;
  constexpr Parity(int v) : v_(static_cast<std::uint8_t>(((v % 2) + 2) % 2)) {}
  constexpr int value() const { return v_; }
  constexpr Parity operator+(Parity o) const { return Parity(v_ + o.v_); }
  constexpr Parity& operator+=(Parity o) { return *this = *this + o; }
  constexpr bool operator==(const Parity&) const = default;
  // (-1)^value
  constexpr int sign() const { return v_ ? -1 : 1; }

 private:
  std::uint8_t v_ = 0;
};

using ParityVec = std::vector<Parity>;

}  // namespace extsq
