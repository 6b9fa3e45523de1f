#pragma once

#include <array>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "g2maps/components.hpp"
#include "g2maps/hyperelliptic.hpp"
#include "g2maps/projective.hpp"
#include "g2maps/singularities.hpp"

namespace g2maps {

// ---------------------------------------------------------------------------
// Generic criteria
// ---------------------------------------------------------------------------

/// Tangent data at the image point of a contracted subcurve. Directions live in
/// quotient coordinates of the tangent space at `base`; a zero direction is a
/// tail whose map ramifies at the node.
struct TangentConfiguration {
    P2Point base;
    std::vector<std::array<Rational, 2>> directions;
    std::optional<ProjLine2> line;

    /// Directions of lines through base (IncidenceError otherwise).
    static TangentConfiguration from_lines(const P2Point& base, const std::vector<ProjLine2>& lines);
};

/// Direction of a line through base in quotient coordinates.
std::array<Rational, 2> line_direction(const P2Point& base, const ProjLine2& line);

/// span <= k - 1. DomainError when there are no directions or their count is not k.
bool genus1_tails_condition(const TangentConfiguration& tc, unsigned k);

/// Every genus-one degree >= 1 and every genus-two degree >= 3.
bool unobstructed_isolated(const std::vector<int>& genus1_degrees, const std::vector<int>& genus2_degrees);

enum class RibbonMode { Contracted, Hyperelliptic };

/// Contracted: k >= 2 and span <= k - 2. Hyperelliptic: the line must pass
/// through base (IncidenceError otherwise) and the span of the directions
/// modulo the line's direction is <= k - 1.
bool ribbon_descent_condition(const TangentConfiguration& tc, unsigned k, RibbonMode mode);

/// Codimension of the sections pulled back from the plane inside the
/// k-dimensional space of sections vanishing on the contracted core.
unsigned section_descent_codim(const TangentConfiguration& tc);

/// Common point of pairwise distinct lines; DegenerateConfiguration when they
/// are not concurrent or repeat.
P2Point concurrency_point(const std::vector<ProjLine2>& lines);

/// Thrown when two attaching points share a hyperelliptic fiber.
class DegenerateFiber : public DegenerateConfiguration {
public:
    using DegenerateConfiguration::DegenerateConfiguration;
};

/// Cross-ratio of the four lines in the pencil equals that of the x-images of
/// the four points, line i matched with point i.
bool cross_ratio_match(const std::array<ProjLine2, 4>& lines, const HyperellipticCurve& curve,
                       const std::array<CurvePoint, 4>& points);

/// Permutations s (as images of 0..3) for which lines[i] matched with
/// points[s[i]] has equal cross-ratios, in lexicographic order.
std::vector<std::array<unsigned, 4>> cross_ratio_matching_permutations(const std::array<ProjLine2, 4>& lines,
                                                                       const HyperellipticCurve& curve,
                                                                       const std::array<CurvePoint, 4>& points);

// ---------------------------------------------------------------------------
// Instances
// ---------------------------------------------------------------------------

/// Attaching point of a tail on the genus-two core. `point` is absent for a
/// generic attachment or when the family has no genus-two core.
struct Attachment {
    std::string tail;
    unsigned degree;
    std::optional<CurvePoint> point;
    bool generic = false;
};

/// A component mapping two-to-one onto a line, with its rational branch points.
struct DoubleCover {
    std::string line;
    std::vector<P2Point> branch_points;
};

struct ImageData {
    std::map<std::string, std::vector<PlanarBranch>> germs;
    std::map<std::string, ProjLine2> lines;
    std::map<std::string, Conic2> conics;
    std::optional<Polynomial> cubic;  ///< form in x, y, z
    std::map<std::string, P2Point> points;
    std::map<std::string, std::string> tail_images;     ///< tail -> line or conic label
    std::map<std::string, DoubleCover> double_covers;  ///< component -> cover of a line
};

struct SmoothabilityInstance {
    ComponentFamily family;
    std::optional<HyperellipticCurve> curve;
    std::vector<Attachment> attach;
    std::optional<bool> generic_attach;
    ImageData image;
};

/// Structural checks: (2,4) family, attachment count and degrees, points on
/// the curve, referenced labels present, generic flag consistent with the points.
/// Throws ValidationError with a JSON pointer into the instance document.
void validate_instance(const SmoothabilityInstance& inst);

// ---------------------------------------------------------------------------
// Rules and verdicts
// ---------------------------------------------------------------------------

struct PredicateResult {
    bool value;
    std::string detail;
};

struct Predicate {
    std::string name;
    std::function<PredicateResult(const SmoothabilityInstance&)> eval;
};

struct Disjunct {
    std::string name;
    std::vector<Predicate> conjuncts;
    std::vector<SingularityType> witness;
};

/// Smoothable iff some disjunct has all conjuncts true, unless the family is
/// contained in main or reduces to another family.
struct FamilyRule {
    enum class Kind { Disjunction, Contained, ReducesTo };
    Kind kind;
    std::vector<Disjunct> disjuncts;
    std::optional<ComponentFamily> target;
    std::string note;
};

/// Rule for a family of the (2,4) catalog; DomainError otherwise.
FamilyRule family_rule(const ComponentFamily& f);

struct TraceEntry {
    std::string disjunct;
    std::string predicate;
    bool value;
    std::string detail;
};

struct Verdict {
    enum class Outcome { Smoothable, NotSmoothable, ContainedInMain, ReducesTo };
    Outcome outcome;
    std::vector<SingularityType> witness;  ///< non-empty iff Smoothable
    std::string condition;                 ///< satisfied disjunct, or first failed "disjunct/predicate"
    std::optional<ComponentFamily> reduces_to;
    std::vector<TraceEntry> trace;
};

std::string to_string(Verdict::Outcome o);

/// Validates, then evaluates the family rule. Within a disjunct evaluation stops
/// at the first false conjunct; disjuncts are tried in order until one holds.
/// Library errors raised by a predicate are recorded as false with the message.
Verdict decide(const SmoothabilityInstance& inst);

/// Recomputes the verdict from recorded predicate values without re-evaluating.
Verdict replay(const FamilyRule& rule, const std::vector<TraceEntry>& trace);

// ---------------------------------------------------------------------------
// Intersection catalog
// ---------------------------------------------------------------------------

struct IntersectionComponent {
    std::string description;
    int dim;
    std::vector<SingularityType> witness;
};

struct CatalogRecord {
    ComponentFamily family;
    int family_dim;
    std::vector<IntersectionComponent> components;
    bool contained = false;
    std::optional<ComponentFamily> reduces_to;
};

/// Every family of enumerate_families(2, 4), in that order.
std::vector<CatalogRecord> intersection_catalog();
/// DomainError for a family outside the catalog.
CatalogRecord catalog_record(const ComponentFamily& f);

enum class MarkedModuli { M, W, K };
/// stratum + (3 + k) for M(2,k); stratum + (2 + k) for the divisors W(2,k), K(2,k).
int intersection_dimension_from_strata(int stratum_dim, MarkedModuli space, int k);

}  // namespace g2maps
