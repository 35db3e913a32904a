#pragma once

#include <string>

#include "hyperspace/actions.hpp"
#include "hyperspace/hitmiss.hpp"
#include "hyperspace/induced.hpp"
#include "hyperspace/sets.hpp"
#include "hyperspace/spaces.hpp"

namespace hyperspace {

/// Text literals for spaces, sets, maps and group elements. The grammar is
/// documented in README.md. Every parser throws ValidationError with the
/// offending position on malformed input.
///
///   space:  line[:x0=v] | R^n[:x0=(v,..)] | interval(a,b)[:x0=v]
///           | finite([[..],..])[:x0=i]
///   number: decimal or an arithmetic expression over + - * / ( ) and pi
///   set:    piece (U piece)*, all pieces of one kind
///   piece:  {p,..} | [a,b] | box(p,p) | ball(p,r) | ray(p,p) | seg(p,p)
///           | cloud({p,..},h)
///   map:    identity | affine(a,b) | linear([[..],..]) | sinrecip | arctan
///           | pwl((x,y),..) | compose(map;map;..)
///   group:  identity | rotation(t) | translation(p) | scaling(l)
///           | isometry([[..],..];p) | compose(g;g;..)
///   nbhds:  constraint (; constraint)*
///   constraint: hit(open) | contain(open) | miss(set)
///   open:   ball(p,r) (U ball(p,r))* | complement(set)
SpacePtr parse_space(const std::string& text);
ClosedSet parse_set(const std::string& text, const SpacePtr& space);
/// `space` is the domain; sinrecip ignores it unless it is an open interval.
MapSpec parse_map(const std::string& text, const SpacePtr& space);
GroupElement parse_group(const std::string& text, const SpacePtr& space);
double parse_number(const std::string& text);
Point parse_point(const std::string& text, const SpacePtr& space);
OpenSet parse_open(const std::string& text, const SpacePtr& space);
NeighborhoodSpec parse_neighborhoods(const std::string& text, const SpacePtr& space);

/// Replaces every standalone identifier `k` of a literal template with
/// "(index)", e.g. "{1/k}" -> "{1/(3)}".
std::string instantiate(const std::string& pattern, std::size_t index);

/// Literal text of a set, re-parseable by parse_set.
std::string format_set(const ClosedSet& a);
std::string format_space(const AmbientSpace& space);

}  // namespace hyperspace
