#include <functional>

#include "tetrabox/onsager.hpp"

namespace tetrabox {

namespace {

using Emit = std::function<void(Slot, long, const Rational&)>;

Rational neg4_pow(long i) { return Rational(-4).pow(i); }

// Emits only non-negative indices, which realizes the convention that
// sequence elements with negative index vanish.
Emit guarded(Coords& out, const Rational& weight) {
  return [&out, weight](Slot slot, long i, const Rational& c) {
    if (i >= 0) {
      out.add(slot, i, c * weight);
    }
  };
}

// a_{2i} = sum_k 16^k e_{i-2k}, e_m = x_m + y_{m-1} - z_{m-1} - 4y_{m-2} - 4z_{m-2}.
void a_even_in_xyz(long i, const Rational& w, const Emit& emit) {
  for (long k = 0; 2 * k <= i; ++k) {
    const long m = i - 2 * k;
    const Rational c = w * Rational(16).pow(k);
    emit(Slot::X, m, c);
    emit(Slot::Y, m - 1, c);
    emit(Slot::Z, m - 1, -c);
    emit(Slot::Y, m - 2, c * Rational(-4));
    emit(Slot::Z, m - 2, c * Rational(-4));
  }
}

void ab_to_xyz(Slot slot, long i, const Rational& w, const Emit& emit) {
  switch (slot) {
    case Slot::AEven:
      a_even_in_xyz(i, w, emit);
      break;
    case Slot::BEven:
      for (long k = 0; 2 * k <= i; ++k) {
        const long m = i - 2 * k;
        const Rational c = w * Rational(16).pow(k);
        emit(Slot::Y, m, c * Rational(-1, 4));
        emit(Slot::Z, m, c * Rational(1, 4));
        emit(Slot::X, m - 1, c * Rational(-4));
        emit(Slot::Y, m - 1, c);
        emit(Slot::Z, m - 1, c);
      }
      break;
    default:  // a_{2i+1} = y_i/2 + z_i/2 - 2 a_{2i}
      emit(Slot::Y, i, w * Rational(1, 2));
      emit(Slot::Z, i, w * Rational(1, 2));
      a_even_in_xyz(i, w * Rational(-2), emit);
      break;
  }
}

void xyz_to_ab(Slot slot, long i, const Rational& w, const Emit& emit) {
  switch (slot) {
    case Slot::X:  // a_{2i} + 4 b_{2i-2}
      emit(Slot::AEven, i, w);
      emit(Slot::BEven, i - 1, w * Rational(4));
      break;
    case Slot::Y:  // a_{2i+1} + 2a_{2i} + 4a_{2i-1} - 2b_{2i}
      emit(Slot::AOdd, i, w);
      emit(Slot::AEven, i, w * Rational(2));
      emit(Slot::AOdd, i - 1, w * Rational(4));
      emit(Slot::BEven, i, w * Rational(-2));
      break;
    default:  // a_{2i+1} + 2a_{2i} - 4a_{2i-1} + 2b_{2i}
      emit(Slot::AOdd, i, w);
      emit(Slot::AEven, i, w * Rational(2));
      emit(Slot::AOdd, i - 1, w * Rational(-4));
      emit(Slot::BEven, i, w * Rational(2));
      break;
  }
}

void xyz_to_delta(Slot slot, long i, const Rational& w, const Emit& emit) {
  const Rational c = w * neg4_pow(i);
  switch (slot) {
    case Slot::X:
      emit(Slot::X, i, c);
      emit(Slot::X, i - 2, -c);
      break;
    case Slot::Y:
      emit(Slot::Y, i, c * Rational(-4));
      emit(Slot::Y, i - 1, c * Rational(4));
      break;
    default:
      emit(Slot::Z, i, c * Rational(-4));
      emit(Slot::Z, i - 1, c * Rational(-4));
      break;
  }
}

void delta_to_xyz(Slot slot, long i, const Rational& w, const Emit& emit) {
  switch (slot) {
    case Slot::X:
      for (long j = 0; 2 * j <= i; ++j) {
        emit(Slot::X, i - 2 * j, w / neg4_pow(i - 2 * j));
      }
      break;
    case Slot::Y:
      for (long j = 0; j <= i; ++j) {
        emit(Slot::Y, j, w / neg4_pow(j + 1));
      }
      break;
    default: {
      const Rational sign = i % 2 == 0 ? Rational(-1) : Rational(1);
      for (long j = 0; j <= i; ++j) {
        emit(Slot::Z, j, w * sign / Rational(4).pow(j + 1));
      }
      break;
    }
  }
}

void ab_to_delta(Slot slot, long i, const Rational& w, const Emit& emit) {
  switch (slot) {
    case Slot::AEven: {
      const Rational c = w * neg4_pow(i);
      emit(Slot::X, i, c);
      emit(Slot::Y, i - 1, c);
      emit(Slot::Z, i - 1, -c);
      break;
    }
    case Slot::BEven: {
      const Rational c = w * neg4_pow(i);
      emit(Slot::X, i - 1, c);
      emit(Slot::Y, i, c);
      emit(Slot::Z, i, -c);
      break;
    }
    default: {
      const Rational c = w * Rational(-2) * neg4_pow(i);
      emit(Slot::X, i, c);
      emit(Slot::Y, i, c);
      emit(Slot::Z, i, c);
      break;
    }
  }
}

void delta_to_ab(Slot slot, long i, const Rational& w, const Emit& emit) {
  switch (slot) {
    case Slot::X:
      for (long j = 0; 2 * j <= i; ++j) {
        const long m = i - 2 * j;
        const Rational c = w / neg4_pow(m);
        emit(Slot::AEven, m, c);
        emit(Slot::BEven, m - 1, c * Rational(4));
      }
      break;
    case Slot::Y:
      for (long j = 0; j <= i; ++j) {
        const Rational c = w / neg4_pow(j + 1);
        emit(Slot::AOdd, j, c);
        emit(Slot::AEven, j, c * Rational(2));
        emit(Slot::AOdd, j - 1, c * Rational(4));
        emit(Slot::BEven, j, c * Rational(-2));
      }
      break;
    default: {
      const Rational sign = i % 2 == 0 ? Rational(-1) : Rational(1);
      for (long j = 0; j <= i; ++j) {
        const Rational c = w * sign / Rational(4).pow(j + 1);
        emit(Slot::AOdd, j, c);
        emit(Slot::AEven, j, c * Rational(2));
        emit(Slot::AOdd, j - 1, c * Rational(-4));
        emit(Slot::BEven, j, c * Rational(2));
      }
      break;
    }
  }
}

}  // namespace

Coords transition(const Coords& c, Basis to) {
  if (c.basis() == to) {
    return c;
  }
  using Rule = void (*)(Slot, long, const Rational&, const Emit&);
  Rule rule = nullptr;
  switch (c.basis()) {
    case Basis::AB:
      rule = to == Basis::XYZ ? ab_to_xyz : ab_to_delta;
      break;
    case Basis::XYZ:
      rule = to == Basis::AB ? xyz_to_ab : xyz_to_delta;
      break;
    case Basis::DELTA:
      rule = to == Basis::AB ? delta_to_ab : delta_to_xyz;
      break;
  }
  Coords out(to, c.prime_level());
  const Emit emit = guarded(out, Rational(1));
  for (const auto& [key, value] : c.entries()) {
    rule(key.first, key.second, value, emit);
  }
  return out;
}

}  // namespace tetrabox
