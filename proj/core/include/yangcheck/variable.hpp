#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace yc {

// Variables live in fixed slots.  Slot order is the global variable order
// used by the monomial ordering: w1..w8, Y1..Y8, z1..z8, u, v, xi, xi1..xi5,
// kappa, psi, hbar.  A smaller slot is more significant.
inline constexpr int kMaxIndexed = 8;
inline constexpr int kMaxXi = 5;
inline constexpr int kNumSlots = 35;

enum class Family : uint8_t { w, Y, z, u, v, xi, kappa, psi, hbar };

class Var {
 public:
  constexpr Var() = default;

  static Var w(int i) { return indexed(0, i, kMaxIndexed); }
  static Var Y(int i) { return indexed(8, i, kMaxIndexed); }
  static Var z(int i) { return indexed(16, i, kMaxIndexed); }
  static Var u() { return Var(24); }
  static Var v() { return Var(25); }
  // xi(0) is the bare spectral parameter "xi".
  static Var xi(int i = 0);
  static Var kappa() { return Var(32); }
  static Var psi() { return Var(33); }
  static Var hbar() { return Var(34); }

  static Var from_slot(int slot);
  static std::optional<Var> parse(std::string_view name);

  Family family() const;
  int index() const;
  std::string name() const;
  int slot() const { return slot_; }

  friend bool operator==(Var a, Var b) { return a.slot_ == b.slot_; }
  friend bool operator!=(Var a, Var b) { return a.slot_ != b.slot_; }
  friend bool operator<(Var a, Var b) { return a.slot_ < b.slot_; }

 private:
  explicit constexpr Var(uint8_t s) : slot_(s) {}
  static Var indexed(int base, int i, int max);
  uint8_t slot_ = 0;
};

}  // namespace yc
