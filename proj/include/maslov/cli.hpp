#pragma once

#include "maslov/reduction.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace maslov {

/// Plain-data form of a trace: everything make_trace needs, in the order the
/// text format writes it.
struct TraceDocument {
    Surface surface;
    PLPath alpha;
    PLPath beta;
    Point x_loc{};
    Point y_loc{};
    Direction ga_dir = Direction::Forward;
    long long ga_loops = 0;
    Direction gb_dir = Direction::Forward;
    long long gb_loops = 0;
    long long offset = 0;

    bool operator==(const TraceDocument&) const = default;
};

/// Line-oriented text format with SURFACE / CURVE ALPHA / CURVE BETA / TRACE
/// sections; rationals written "p/q" or "p". Throws ParseError with line and
/// column on malformed input.
TraceDocument parse_document(const std::string& text);
std::string serialize_document(const TraceDocument& doc);

/// Builds the trace, resolving the endpoint coordinates against the computed
/// crossings. Throws SemanticError when a coordinate is not a crossing;
/// make_trace errors pass through.
Trace to_trace(const TraceDocument& doc);

/// Document for an already-built trace.
TraceDocument document_of(const Trace& t);

/// Word text format: one "C position up|down" line per crossing in axis order,
/// then "TRAVERSAL i j ..." in B order. Signs are implied by the directions.
CrossingWord parse_word(const std::string& text);
std::string serialize_word(const CrossingWord& word);

enum class Profile { PlaneArc, PlaneGeneral, Annulus, Torus, Word };

Profile profile_from_name(const std::string& name);  // ParseError on unknown
std::string to_string(Profile p);

/// Random legal crossing word with the requested number of crossings, built by
/// simulating the drawing of the arc face by face (always realizable).
CrossingWord generate_word(std::uint64_t seed, int crossings);

/// Deterministic random trace for the profile. Resamples internally on
/// degenerate draws; throws GenerationExhausted when the attempt budget runs
/// out.
TraceDocument generate(std::uint64_t seed, Profile profile);

struct CheckResult {
    std::string name;
    Profile profile = Profile::PlaneArc;
    std::uint64_t seed = 0;
    bool pass = true;
    std::string detail;
    std::string counterexample;  // serialized document when failing
};

struct VerifyReport {
    std::vector<CheckResult> failures;
    long long cases_run = 0;
    long long checks_run = 0;
    bool all_pass() const { return failures.empty(); }
};

/// Runs the oracle-agreement and identity suites on n generated cases per
/// profile. Case seeds derive from `seed`; any failure carries a replayable
/// seed and the serialized counterexample.
VerifyReport run_verify(const std::vector<Profile>& profiles, int n,
                        std::uint64_t seed);
std::string format_report(const VerifyReport& report);

/// Deterministic SVG picture: alpha and beta strokes, orientation arrows,
/// endpoint and per-face w labels, and a caption with m_x, m_y and mu.
/// Quotient traces draw the fundamental strip plus translate ghosts.
std::string render_svg(const Trace& t);

}  // namespace maslov
