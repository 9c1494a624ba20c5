#ifndef QKWC_JSON_IO_HPP
#define QKWC_JSON_IO_HPP

#include <json.hpp>

#include "qkwc/ifun.hpp"
#include "qkwc/wallcross.hpp"

namespace qkwc {

using json = nlohmann::ordered_json;

// Rationals are "p" or "p/q" strings; plain integers are accepted on input.
json to_json(const Rational &x);
Rational rational_from_json(const json &j);

// {"nilpotent": [[name, order]], "units": [...], "newton": {"max_index": M,
//  "weight_cutoff": W}, "t_vars": [[name, order]]}
json to_json(const RingSpec &spec);
RingSpecPtr ring_spec_from_json(const json &j);

// {"monomial key": "p/q"}, keys sorted by the ring's monomial order.
json to_json(const RingElem &a);
RingElem ring_elem_from_json(const RingSpecPtr &spec, const json &j);

// {"exponent": RingElem}
json to_json(const QLaurent &f);
QLaurent qlaurent_from_json(const RingSpecPtr &spec, const json &j);

// {"num": QLaurent, "den": [[a, u, mult]]}
json to_json(const QRational &f);
QRational qrational_from_json(const RingSpecPtr &spec, const json &j);

json to_json(const ConeSpec &cone);
ConeSpecPtr cone_from_json(const json &j);

json to_json(const NovikovSeries &I);
json to_json(const ConeSpec &cone, const MuSeries &mu);

json to_json(const CorrelatorSeries &F);
CorrelatorSeries correlator_series_from_json(const RingSpecPtr &ring, const json &j);

// {"ring", "cone", "factors": [{"base", "form", "exponent"}],
//  "prefactors": [{"q_linear", "q_quadratic", "units": [{"base", "form"}]}]}
HypergeomSpec hypergeom_spec_from_json(const json &j);

json to_json(const Ledger &ledger);

} // namespace qkwc

#endif
