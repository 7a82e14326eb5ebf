#include "lahkit/sizeset.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace lahkit {

namespace {

std::string trim(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

long parse_long(const std::string& tok, const std::string& ctx) {
  if (tok.empty()) throw std::invalid_argument("size set: missing integer after '" + ctx + "'");
  size_t pos = 0;
  long v = 0;
  try {
    v = std::stol(tok, &pos);
  } catch (const std::exception&) {
    throw std::invalid_argument("size set: bad integer '" + tok + "'");
  }
  if (pos != tok.size()) throw std::invalid_argument("size set: bad integer '" + tok + "'");
  return v;
}

}  // namespace

SizeSet SizeSet::parse(const std::string& text) {
  SizeSet s;
  std::string t = trim(text);
  if (t.empty()) throw std::invalid_argument("size set: empty description");
  s.desc_ = t;

  if (t == "all") {
    s.kind_ = SetKind::All;
    return s;
  }
  if (t == "odd") {
    s.kind_ = SetKind::Odd;
    return s;
  }
  if (t == "even") {
    s.kind_ = SetKind::Even;
    return s;
  }
  if (t.rfind(">=", 0) == 0) {
    s.kind_ = SetKind::AtLeast;
    s.a_ = parse_long(trim(t.substr(2)), ">=");
    if (s.a_ < 1) throw std::invalid_argument("size set: '>= m' needs m >= 1");
    return s;
  }
  if (t.rfind("<=", 0) == 0) {
    s.kind_ = SetKind::AtMost;
    s.a_ = parse_long(trim(t.substr(2)), "<=");
    if (s.a_ < 1) throw std::invalid_argument("size set: '<= m' needs m >= 1");
    return s;
  }
  if (t.rfind("not", 0) == 0 && (t.size() == 3 || std::isspace(static_cast<unsigned char>(t[3])))) {
    s.kind_ = SetKind::Not;
    s.a_ = parse_long(trim(t.substr(3)), "not");
    if (s.a_ < 1) throw std::invalid_argument("size set: 'not p' needs p >= 1");
    return s;
  }
  if (t.rfind("mod", 0) == 0 && (t.size() == 3 || std::isspace(static_cast<unsigned char>(t[3])))) {
    s.kind_ = SetKind::Residue;
    std::istringstream in(t.substr(3));
    std::string ta, tb, rest;
    in >> ta >> tb;
    if (in >> rest) throw std::invalid_argument("size set: 'mod a b' takes two integers");
    s.a_ = parse_long(ta, "mod");
    s.b_ = parse_long(tb, "mod");
    if (s.b_ < 1 || s.a_ < 0 || s.a_ >= s.b_) throw std::invalid_argument("size set: 'mod a b' needs 0 <= a < b");
    return s;
  }

  // explicit member list
  s.kind_ = SetKind::Finite;
  std::string item;
  std::istringstream in(t);
  while (std::getline(in, item, ',')) {
    long v = parse_long(trim(item), ",");
    if (v < 1) throw std::invalid_argument("size set: members must be >= 1");
    s.members_.push_back(v);
  }
  if (!t.empty() && t.back() == ',') throw std::invalid_argument("size set: trailing comma");
  if (s.members_.empty()) throw std::invalid_argument("size set: empty member list");
  std::sort(s.members_.begin(), s.members_.end());
  s.members_.erase(std::unique(s.members_.begin(), s.members_.end()), s.members_.end());
  return s;
}

SizeSet SizeSet::finite(std::vector<long> members) {
  SizeSet s;
  s.kind_ = SetKind::Finite;
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  if (!members.empty() && members.front() < 1)
    throw std::invalid_argument("size set: members must be >= 1");
  s.members_ = std::move(members);
  std::string d;
  for (size_t i = 0; i < s.members_.size(); ++i) {
    if (i) d += ',';
    d += std::to_string(s.members_[i]);
  }
  s.desc_ = d;
  return s;
}

bool SizeSet::contains(long s) const {
  if (s < 1) return false;
  switch (kind_) {
    case SetKind::All: return true;
    case SetKind::Odd: return s % 2 == 1;
    case SetKind::Even: return s % 2 == 0;
    case SetKind::Finite: return std::binary_search(members_.begin(), members_.end(), s);
    case SetKind::AtLeast: return s >= a_;
    case SetKind::AtMost: return s <= a_;
    case SetKind::Not: return s != a_;
    case SetKind::Residue: return s % b_ == a_;
  }
  return false;
}

std::vector<long> SizeSet::members_upto(long bound) const {
  std::vector<long> out;
  for (long s = 1; s <= bound; ++s)
    if (contains(s)) out.push_back(s);
  return out;
}

DerivedSets SizeSet::derived_sets(long bound) const {
  DerivedSets d;
  for (long s = 1; s <= bound; ++s) {
    if (!contains(s)) continue;
    bool least = !contains(s - 1);
    bool greatest = !contains(s + 1);
    if (least) d.least.push_back(s);
    if (greatest) d.greatest.push_back(s);
    if (greatest && !least) d.hat.push_back(s);
  }
  return d;
}

bool SizeSet::is_plus_one_monoid(long bound) const {
  switch (kind_) {
    case SetKind::All: return true;
    case SetKind::Odd: return true;
    case SetKind::Residue:
      if (a_ == 1 || (a_ == 0 && b_ == 1)) return true;
      break;
    default: break;
  }
  if (bound < 1 || !contains(1)) return false;
  // closure of S-1 under addition, checked inside [0, bound-1]
  std::vector<long> shifted;
  std::vector<char> in(bound, 0);
  for (long s = 1; s <= bound; ++s) {
    if (contains(s)) {
      shifted.push_back(s - 1);
      in[s - 1] = 1;
    }
  }
  for (long x : shifted) {
    for (long y : shifted) {
      if (x + y >= bound) break;
      if (!in[x + y]) return false;
    }
  }
  return true;
}

SizeSet SizeSet::without(long u, long bound) const {
  std::vector<long> m;
  for (long s : members_upto(bound))
    if (s != u) m.push_back(s);
  return finite(std::move(m));
}

}  // namespace lahkit
