#include "yangcheck/variable.hpp"

#include <charconv>
#include <stdexcept>

namespace yc {

Var Var::indexed(int base, int i, int max) {
  if (i < 1 || i > max)
    throw std::out_of_range("variable index " + std::to_string(i) + " out of range 1.." +
                            std::to_string(max));
  return Var(static_cast<uint8_t>(base + i - 1));
}

Var Var::xi(int i) {
  if (i < 0 || i > kMaxXi) throw std::out_of_range("xi index out of range");
  return Var(static_cast<uint8_t>(26 + i));
}

Var Var::from_slot(int slot) {
  if (slot < 0 || slot >= kNumSlots) throw std::out_of_range("bad variable slot");
  return Var(static_cast<uint8_t>(slot));
}

Family Var::family() const {
  if (slot_ < 8) return Family::w;
  if (slot_ < 16) return Family::Y;
  if (slot_ < 24) return Family::z;
  if (slot_ == 24) return Family::u;
  if (slot_ == 25) return Family::v;
  if (slot_ < 32) return Family::xi;
  if (slot_ == 32) return Family::kappa;
  if (slot_ == 33) return Family::psi;
  return Family::hbar;
}

int Var::index() const {
  switch (family()) {
    case Family::w: return slot_ + 1;
    case Family::Y: return slot_ - 7;
    case Family::z: return slot_ - 15;
    case Family::xi: return slot_ - 26;
    default: return 0;
  }
}

std::string Var::name() const {
  switch (family()) {
    case Family::w: return "w" + std::to_string(index());
    case Family::Y: return "Y" + std::to_string(index());
    case Family::z: return "z" + std::to_string(index());
    case Family::u: return "u";
    case Family::v: return "v";
    case Family::xi: return index() == 0 ? "xi" : "xi" + std::to_string(index());
    case Family::kappa: return "kappa";
    case Family::psi: return "psi";
    case Family::hbar: return "hbar";
  }
  return "?";
}

std::optional<Var> Var::parse(std::string_view name) {
  if (name == "u") return u();
  if (name == "v") return v();
  if (name == "xi") return xi(0);
  if (name == "kappa") return kappa();
  if (name == "psi") return psi();
  if (name == "hbar") return hbar();
  auto indexed_of = [&](std::string_view prefix) -> std::optional<int> {
    if (name.size() <= prefix.size() || name.substr(0, prefix.size()) != prefix) return std::nullopt;
    auto digits = name.substr(prefix.size());
    if (digits[0] == '0') return std::nullopt;
    int value = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (ec != std::errc() || ptr != digits.data() + digits.size()) return std::nullopt;
    return value;
  };
  try {
    if (auto i = indexed_of("xi")) return xi(*i);
    if (auto i = indexed_of("w")) return w(*i);
    if (auto i = indexed_of("Y")) return Y(*i);
    if (auto i = indexed_of("z")) return z(*i);
  } catch (const std::out_of_range&) {
    return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace yc
