#include "bordercert/coeffring.hpp"

#include <algorithm>
#include <sstream>

namespace bordercert {

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

IndeterminateRegistry::IndeterminateRegistry(const OrderIdealData& oid) {
  for (int j = 1; j <= oid.nu; ++j) {
    if (!oid.is_leading(j)) continue;
    for (int i = 1; i <= oid.mu; ++i) {
      if (!oid.is_trailing(i)) continue;
      c_index_.emplace(std::make_pair(i, j), static_cast<int>(names_.size()));
      names_.push_back("C[" + std::to_string(i) + "," + std::to_string(j) + "]");
      labels_.emplace_back(i, j);
    }
  }
  num_c_ = static_cast<int>(names_.size());
  for (int q = 1; q <= oid.gamma; ++q) {
    names_.push_back("theta[" + std::to_string(q) + "]");
    labels_.emplace_back(q, 0);
  }
}

std::shared_ptr<const IndeterminateRegistry> IndeterminateRegistry::thetas_only(int gamma) {
  auto reg = std::shared_ptr<IndeterminateRegistry>(new IndeterminateRegistry());
  for (int q = 1; q <= gamma; ++q) {
    reg->names_.push_back("theta[" + std::to_string(q) + "]");
    reg->labels_.emplace_back(q, 0);
  }
  return reg;
}

int IndeterminateRegistry::c_id(int i, int j) const {
  auto it = c_index_.find({i, j});
  return it == c_index_.end() ? -1 : it->second;
}

int IndeterminateRegistry::theta_id(int q) const {
  if (q < 1 || q > num_modification())
    throw ArgumentError("theta index " + std::to_string(q) + " out of range");
  return num_c_ + q - 1;
}

std::optional<int> IndeterminateRegistry::find(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<int>(it - names_.begin());
}

bool CoeffPoly::KeyLess::operator()(const Key& a, const Key& b) const {
  int da = 0, db = 0;
  for (auto& p : a) da += p.second;
  for (auto& p : b) db += p.second;
  if (da != db) return da < db;
  return a < b;
}

CoeffPoly::CoeffPoly(const Rational& c) {
  if (sgn(c) != 0) terms_.emplace(Key{}, c);
}

CoeffPoly CoeffPoly::indeterminate(RegistryPtr reg, int id) {
  if (!reg || id < 0 || id >= reg->size()) throw ArgumentError("unknown indeterminate id");
  CoeffPoly p;
  p.reg_ = std::move(reg);
  p.terms_.emplace(Key{{id, 1}}, Rational(1));
  return p;
}

int CoeffPoly::total_degree() const {
  int d = 0;
  for (auto& [k, c] : terms_) {
    int e = 0;
    for (auto& p : k) e += p.second;
    d = std::max(d, e);
  }
  return d;
}

Rational CoeffPoly::constant_term() const {
  auto it = terms_.find(Key{});
  return it == terms_.end() ? Rational(0) : it->second;
}

void CoeffPoly::adopt(const CoeffPoly& o) {
  if (!o.reg_) return;
  if (!reg_) {
    reg_ = o.reg_;
  } else if (reg_ != o.reg_) {
    throw ArgumentError("coefficient polynomials over different indeterminate registries");
  }
}

void CoeffPoly::add_term(const Key& k, const Rational& c) {
  auto [it, inserted] = terms_.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

CoeffPoly& CoeffPoly::operator+=(const CoeffPoly& o) {
  adopt(o);
  for (auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

CoeffPoly& CoeffPoly::operator-=(const CoeffPoly& o) {
  adopt(o);
  for (auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

namespace {

CoeffPoly::Key merge_keys(const CoeffPoly::Key& a, const CoeffPoly::Key& b) {
  CoeffPoly::Key out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.push_back(b[j++]);
    } else {
      out.emplace_back(a[i].first, a[i].second + b[j].second);
      ++i, ++j;
    }
  }
  return out;
}

}  // namespace

CoeffPoly operator*(const CoeffPoly& a, const CoeffPoly& b) {
  CoeffPoly out;
  out.adopt(a);
  out.adopt(b);
  for (auto& [ka, ca] : a.terms_)
    for (auto& [kb, cb] : b.terms_) out.add_term(merge_keys(ka, kb), ca * cb);
  return out;
}

CoeffPoly& CoeffPoly::operator*=(const CoeffPoly& o) { return *this = *this * o; }

CoeffPoly operator-(CoeffPoly a) {
  for (auto& [k, c] : a.terms_) c = -c;
  return a;
}

bool operator==(const CoeffPoly& a, const CoeffPoly& b) {
  if (a.reg_ && b.reg_ && a.reg_ != b.reg_) {
    throw ArgumentError("coefficient polynomials over different indeterminate registries");
  }
  return a.terms_ == b.terms_;
}

CoeffPoly CoeffPoly::derivative(int id) const {
  CoeffPoly out;
  out.reg_ = reg_;
  for (auto& [k, c] : terms_) {
    for (std::size_t t = 0; t < k.size(); ++t) {
      if (k[t].first != id) continue;
      Key nk = k;
      const int e = nk[t].second;
      if (e == 1)
        nk.erase(nk.begin() + static_cast<long>(t));
      else
        nk[t].second = e - 1;
      out.add_term(nk, c * e);
    }
  }
  return out;
}

std::string CoeffPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [k, c] : terms_) {
    Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << '-';
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    bool need_star = false;
    if (k.empty() || mag != 1) {
      os << bordercert::to_string(mag);
      need_star = true;
    }
    for (auto& [id, e] : k) {
      if (need_star) os << '*';
      need_star = true;
      os << (reg_ ? reg_->name(id) : "z" + std::to_string(id));
      if (e > 1) os << '^' << e;
    }
  }
  return os.str();
}

void Assignment::set(int id, Rational v) {
  if (id < 0 || id >= size()) throw ArgumentError("assignment id out of range");
  values_[id] = std::move(v);
}

const Rational& Assignment::get(int id) const {
  if (!has(id)) throw ArgumentError("no value assigned to indeterminate " + std::to_string(id));
  return *values_[id];
}

Rational specialize(const CoeffPoly& p, const Assignment& a) {
  return p.evaluate<Rational>([&](int id) { return a.get(id); },
                              [](const Rational& c) { return c; });
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mul_mod(r, a, p);
    a = mul_mod(a, a, p);
    e >>= 1;
  }
  return r;
}

bool is_prime_u64(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (p % q == 0) return p == q;
  }
  std::uint64_t d = p - 1;
  int s = 0;
  while ((d & 1) == 0) d >>= 1, ++s;
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = pow_mod(a, d, p);
    if (x == 1 || x == p - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mul_mod(x, x, p);
      if (x == p - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

void validate_prime(std::uint64_t p) {
  if (p <= (std::uint64_t{1} << 31)) throw ArgumentError("prime must exceed 2^31");
  if (!is_prime_u64(p)) throw ArgumentError(std::to_string(p) + " is not prime");
}

std::uint64_t Fp::reduce_literal(std::int64_t v, std::uint64_t p) {
  if (v >= 0) return static_cast<std::uint64_t>(v) % p;
  std::uint64_t m = static_cast<std::uint64_t>(-(v + 1)) % p;  // avoids overflow at INT64_MIN
  return (p - 1 - m) % p;
}

Fp::Fp(std::int64_t v, std::uint64_t prime) : prime_(prime) {
  if (prime == 0) throw ArgumentError("prime must be nonzero");
  value_ = reduce_literal(v, prime);
}

Fp Fp::from_rational(const Rational& q, std::uint64_t prime) {
  auto residue = [&](const Integer& z) {
    return static_cast<std::uint64_t>(mpz_fdiv_ui(z.get_mpz_t(), prime));
  };
  Fp out;
  out.prime_ = prime;
  std::uint64_t den = residue(q.get_den());
  if (den == 0) throw ArgumentError("denominator vanishes modulo the prime");
  out.value_ = mul_mod(residue(q.get_num()), pow_mod(den, prime - 2, prime), prime);
  return out;
}

std::uint64_t Fp::value() const {
  if (prime_ == 0) throw ArgumentError("residue of an unbound literal");
  return value_;
}

void Fp::bind(std::uint64_t prime) {
  if (prime_ == prime || prime == 0) return;
  if (prime_ != 0) throw ArgumentError("prime field elements with different primes");
  prime_ = prime;
  value_ = reduce_literal(literal_, prime);
  literal_ = 0;
}

Fp Fp::inverse() const {
  if (is_zero()) throw ArgumentError("inverse of zero");
  if (prime_ == 0) {
    if (literal_ == 1 || literal_ == -1) return *this;
    throw ArgumentError("inverse of an unbound literal");
  }
  Fp out = *this;
  out.value_ = pow_mod(value_, prime_ - 2, prime_);
  return out;
}

Fp& Fp::operator+=(const Fp& o) {
  if (prime_ == 0 && o.prime_ == 0) {
    literal_ += o.literal_;
    return *this;
  }
  bind(o.prime_);
  Fp b = o;
  b.bind(prime_);
  value_ += b.value_;
  if (value_ >= prime_) value_ -= prime_;
  return *this;
}

Fp& Fp::operator-=(const Fp& o) { return *this += -o; }

Fp& Fp::operator*=(const Fp& o) {
  if (prime_ == 0 && o.prime_ == 0) {
    literal_ *= o.literal_;
    return *this;
  }
  bind(o.prime_);
  Fp b = o;
  b.bind(prime_);
  value_ = mul_mod(value_, b.value_, prime_);
  return *this;
}

Fp operator-(const Fp& a) {
  Fp out = a;
  if (a.prime_ == 0)
    out.literal_ = -a.literal_;
  else
    out.value_ = a.value_ == 0 ? 0 : a.prime_ - a.value_;
  return out;
}

bool operator==(const Fp& a, const Fp& b) {
  if (a.prime_ == 0 && b.prime_ == 0) return a.literal_ == b.literal_;
  Fp x = a, y = b;
  x.bind(b.prime_);
  y.bind(a.prime_);
  return x.value_ == y.value_;
}

}  // namespace bordercert
