#include "projcoh/scheme.hpp"

#include <json.hpp>

#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "projcoh/catalog_data.hpp"

namespace projcoh {

namespace {

// floor of a rational
Int rat_floor(const Rat& x) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
  return q;
}

// reduce v into the half-open fundamental domain of the full-rank rational
// lattice spanned by the columns of k (HNF pivot profile required)
void reduce_mod_rational_lattice(std::vector<Rat>& v, const RatMatrix& k) {
  for (long j = 0; j < k.cols; ++j) {
    long pr = -1;
    for (long i = 0; i < k.rows; ++i)
      if (k.at(i, j) != 0) {
        pr = i;
        break;
      }
    assert(pr >= 0);
    Rat q(rat_floor(v[pr] / k.at(pr, j)));
    if (q != 0)
      for (long i = 0; i < k.rows; ++i) v[i] -= q * k.at(i, j);
  }
}

}  // namespace

std::vector<Rat> canonical_offset(const HermiteBasis& direction, const std::vector<Rat>& offset) {
  long n = direction.ambient_rank;
  if (static_cast<long>(offset.size()) != n)
    throw std::invalid_argument("canonical_offset: offset length mismatch");
  long r = direction.rank();
  const IntMatrix& x = direction.basis;

  // pivot rows of the direction HNF
  std::vector<long> piv;
  for (long j = 0; j < r; ++j)
    for (long i = 0; i < n; ++i)
      if (x.at(i, j) != 0) {
        piv.push_back(i);
        break;
      }
  std::vector<bool> is_piv(n, false);
  for (long p : piv) is_piv[p] = true;
  std::vector<long> comp;
  for (long i = 0; i < n; ++i)
    if (!is_piv[i]) comp.push_back(i);

  // kill the pivot coordinates: c' = c - x * t with x[piv] * t = c[piv]
  std::vector<Rat> c = offset;
  if (r > 0) {
    RatMatrix m(r, r);
    std::vector<Rat> rhs(r);
    for (long i = 0; i < r; ++i) {
      rhs[i] = c[piv[i]];
      for (long j = 0; j < r; ++j) m.at(i, j) = Rat(x.at(piv[i], j));
    }
    std::optional<std::vector<Rat>> t = solve_rational(m, rhs);
    assert(t.has_value());  // pivot submatrix is triangular invertible
    for (long i = 0; i < n; ++i)
      for (long j = 0; j < r; ++j) c[i] -= Rat(x.at(i, j)) * (*t)[j];
    for (long p : piv) c[p] = 0;  // exact by construction; clear rounding of -0/q forms
  }

  // remaining coordinates live in the projection of Z^N along span(x); reduce
  // modulo that full-rank rational lattice
  long nc = static_cast<long>(comp.size());
  if (nc == 0) return c;
  RatMatrix proj(nc, n);  // columns = π(e_j) in complement coordinates
  for (long j = 0; j < n; ++j) {
    std::vector<Rat> e(n, Rat(0));
    e[j] = 1;
    if (r > 0) {
      RatMatrix m(r, r);
      std::vector<Rat> rhs(r);
      for (long i = 0; i < r; ++i) {
        rhs[i] = e[piv[i]];
        for (long jj = 0; jj < r; ++jj) m.at(i, jj) = Rat(x.at(piv[i], jj));
      }
      std::optional<std::vector<Rat>> t = solve_rational(m, rhs);
      for (long i = 0; i < n; ++i)
        for (long jj = 0; jj < r; ++jj) e[i] -= Rat(x.at(i, jj)) * (*t)[jj];
    }
    for (long i = 0; i < nc; ++i) proj.at(i, j) = e[comp[i]];
  }
  // canonical HNF shape for the projected lattice: clear one denominator, HNF,
  // rescale back
  Int d;
  IntMatrix pi = scale_to_int(proj, &d);
  HermiteBasis h = hnf(pi);
  assert(h.rank() == nc);
  RatMatrix k(nc, nc);
  for (long i = 0; i < nc; ++i)
    for (long j = 0; j < nc; ++j) k.at(i, j) = Rat(h.basis.at(i, j)) / Rat(d);

  std::vector<Rat> v(nc);
  for (long i = 0; i < nc; ++i) v[i] = c[comp[i]];
  reduce_mod_rational_lattice(v, k);
  std::vector<Rat> out(n, Rat(0));
  for (long i = 0; i < nc; ++i) out[comp[i]] = v[i];
  return out;
}

HermiteBasis fixed_sublattice(const IntMatrix& m) {
  if (m.rows != m.cols) throw std::invalid_argument("fixed_sublattice: non-square input");
  IntMatrix a = m;
  for (long i = 0; i < m.rows; ++i) a.at(i, i) -= 1;
  return HermiteBasis{m.rows, kernel_basis(a)};
}

SchemeSpec make_scheme(const std::string& name, long ambient_rank, long codim,
                       std::vector<SingularFamily> families) {
  if (ambient_rank <= 0 || codim <= 0) throw std::invalid_argument("scheme: bad rank/codim");
  if (ambient_rank % codim != 0)
    throw std::invalid_argument("scheme: ν = rank/codim must be an integer");
  long nu = ambient_rank / codim;
  long want_rank = nu * (codim - 1);
  std::set<std::string> labels;
  for (SingularFamily& f : families) {
    if (!labels.insert(f.label).second)
      throw std::invalid_argument("scheme: duplicate family label " + f.label);
    if (f.direction.ambient_rank != ambient_rank)
      throw std::invalid_argument("scheme: family " + f.label + " ambient mismatch");
    if (f.direction.rank() != want_rank)
      throw std::invalid_argument("scheme: family " + f.label + " direction rank " +
                                  std::to_string(f.direction.rank()) + ", expected " +
                                  std::to_string(want_rank));
    if (!(saturate(f.direction) == f.direction))
      throw std::invalid_argument("scheme: family " + f.label + " direction not saturated");
    f.offset = canonical_offset(f.direction, f.offset);
  }
  for (size_t i = 0; i < families.size(); ++i)
    for (size_t j = i + 1; j < families.size(); ++j)
      if (families[i].same_class(families[j]))
        throw std::invalid_argument("scheme: duplicate family class " + families[i].label +
                                    " = " + families[j].label);
  return SchemeSpec{name, ambient_rank, codim, std::move(families)};
}

std::vector<std::string> catalog_names() {
  std::vector<std::string> names;
  for (const detail::RawScheme& r : detail::raw_catalog()) names.push_back(r.name);
  return names;
}

SchemeSpec builtin_scheme(const std::string& name, std::optional<Rat> gamma) {
  for (const detail::RawScheme& r : detail::raw_catalog()) {
    if (r.name != name) continue;
    if (gamma.has_value() && name != "generalized_penrose")
      throw std::invalid_argument("gamma parameter only applies to generalized_penrose");
    Rat scale(1);
    if (name == "generalized_penrose" && gamma.has_value()) {
      if (*gamma == 0 || gamma->get_den() == 1)
        throw std::invalid_argument("gamma must be a non-integer rational");
      scale = *gamma / Rat(1, 3);  // stored catalog offsets use γ = 1/3
    }
    std::vector<SingularFamily> fams;
    for (const detail::RawFamily& rf : r.families) {
      SingularFamily f;
      f.label = rf.label;
      IntMatrix dir(r.rank, static_cast<long>(rf.direction_cols.size()));
      for (size_t j = 0; j < rf.direction_cols.size(); ++j) {
        if (static_cast<long>(rf.direction_cols[j].size()) != r.rank)
          throw std::logic_error("catalog direction length corrupt");
        for (long i = 0; i < r.rank; ++i)
          dir.at(i, static_cast<long>(j)) = static_cast<long>(rf.direction_cols[j][i]);
      }
      f.direction = hnf(dir);
      f.offset.resize(r.rank);
      for (long i = 0; i < r.rank; ++i) f.offset[i] = parse_rational(rf.offset[i]) * scale;
      fams.push_back(std::move(f));
    }
    return make_scheme(r.name, r.rank, r.codim, std::move(fams));
  }
  throw std::invalid_argument("unknown scheme: " + name);
}

// --- JSON --------------------------------------------------------------------

SchemeSpec scheme_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  if (!j.is_object()) throw std::invalid_argument("scheme json: root must be an object");
  for (const auto& [key, val] : j.items())
    if (key != "name" && key != "rank" && key != "codim" && key != "families")
      throw std::invalid_argument("scheme json: unknown key " + key);
  if (!j.contains("name") || !j["name"].is_string())
    throw std::invalid_argument("scheme json: missing string name");
  if (!j.contains("rank") || !j["rank"].is_number_integer())
    throw std::invalid_argument("scheme json: missing integer rank");
  if (!j.contains("codim") || !j["codim"].is_number_integer())
    throw std::invalid_argument("scheme json: missing integer codim");
  if (!j.contains("families") || !j["families"].is_array())
    throw std::invalid_argument("scheme json: missing families array");
  long n = j["rank"].get<long>();
  std::vector<SingularFamily> fams;
  for (const nlohmann::json& fj : j["families"]) {
    if (!fj.is_object()) throw std::invalid_argument("scheme json: family must be an object");
    for (const auto& [key, val] : fj.items())
      if (key != "label" && key != "direction" && key != "offset")
        throw std::invalid_argument("scheme json: unknown family key " + key);
    if (!fj.contains("label") || !fj["label"].is_string())
      throw std::invalid_argument("scheme json: family label missing");
    if (!fj.contains("direction") || !fj["direction"].is_array())
      throw std::invalid_argument("scheme json: family direction missing");
    if (!fj.contains("offset") || !fj["offset"].is_array())
      throw std::invalid_argument("scheme json: family offset missing");
    SingularFamily f;
    f.label = fj["label"].get<std::string>();
    const nlohmann::json& dj = fj["direction"];
    IntMatrix dir(n, static_cast<long>(dj.size()));
    for (size_t c = 0; c < dj.size(); ++c) {
      if (!dj[c].is_array() || static_cast<long>(dj[c].size()) != n)
        throw std::invalid_argument("scheme json: direction column must have rank entries");
      for (long i = 0; i < n; ++i) {
        if (!dj[c][i].is_number_integer())
          throw std::invalid_argument("scheme json: direction entries must be integers");
        dir.at(i, static_cast<long>(c)) = static_cast<long>(dj[c][i].get<long long>());
      }
    }
    f.direction = hnf(dir);
    const nlohmann::json& oj = fj["offset"];
    if (static_cast<long>(oj.size()) != n)
      throw std::invalid_argument("scheme json: offset must have rank entries");
    for (const nlohmann::json& e : oj) {
      if (!e.is_string())
        throw std::invalid_argument("scheme json: offsets must be \"p/q\" strings");
      f.offset.push_back(parse_rational(e.get<std::string>()));
    }
    fams.push_back(std::move(f));
  }
  return make_scheme(j["name"].get<std::string>(), n, j["codim"].get<long>(), std::move(fams));
}

SchemeSpec load_scheme_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open scheme file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return scheme_from_json(ss.str());
}

std::string scheme_to_json(const SchemeSpec& s) {
  nlohmann::json j;
  j["name"] = s.name;
  j["rank"] = s.ambient_rank;
  j["codim"] = s.codim;
  j["families"] = nlohmann::json::array();
  for (const SingularFamily& f : s.families) {
    nlohmann::json fj;
    fj["label"] = f.label;
    fj["direction"] = nlohmann::json::array();
    for (long c = 0; c < f.direction.rank(); ++c) {
      nlohmann::json col = nlohmann::json::array();
      for (long i = 0; i < s.ambient_rank; ++i) {
        const Int& v = f.direction.basis.at(i, c);
        assert(v.fits_slong_p());
        col.push_back(v.get_si());
      }
      fj["direction"].push_back(col);
    }
    fj["offset"] = nlohmann::json::array();
    for (const Rat& r : f.offset) {
      std::string t = r.get_num().get_str() + "/" + r.get_den().get_str();
      fj["offset"].push_back(t);
    }
    j["families"].push_back(fj);
  }
  return j.dump(2) + "\n";
}

}  // namespace projcoh
