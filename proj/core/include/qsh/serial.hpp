#pragma once

#include <qsh/hurwitz.hpp>

#include <string>

namespace qsh {

/// Build a braided vector space from a JSON description.  Accepted forms:
///   {"type":"trivial","dim":d}
///   {"type":"diagonal","q":[[expr,...],...],"field":{...}}
///   {"type":"rack","elements":["a",...],"action":[[...]],"cocycle":expr|[[expr,...],...]}
///   {"type":"group_class","group":{"perm_generators":[[...]]},
///    "class_reps":["(1 2)",...]|[ids],"cocycle":expr}
///   {"type":"matrix","R":[[expr,...],...],"field":{...}}
/// Field descriptors: {"field":"rational"} (the default when absent) or
/// {"field":"cyclotomic","order":m}.  Scalar expressions are JSON integers
/// or strings: signed rationals ("-2/3") and sums of monomials in the root
/// of unity z ("z", "z^2", "1+z", "2-3z^2").  Permutation generators use
/// 1-based one-line notation; rack actions are 0-based index tables.
/// Malformed input throws FieldError; matrix braidings are validated against
/// the Yang-Baxter equation unless validate is false.
BraidedVectorSpace parse_braiding_spec(const std::string& text, bool validate = true);

/// Parse one scalar expression in the grammar above.
Scalar parse_scalar(const std::string& text, const FieldRef& F);

/// Extract the group and the conjugation-closed class element ids from a
/// "group_class" braiding description.  Throws FieldError for other types;
/// used by pipelines that need the group itself, not just the braiding.
std::pair<GroupData, std::vector<int>> parse_group_class_spec(const std::string& text);

/// "num/den" (or just "num") by default; with decimal, a 6-significant-digit
/// decimal rendering.
std::string render_rational(const mpq_class& q, bool decimal);

std::string table_to_json(const FiltrationTable& t);
/// Rows are graded indices (only those with a nonzero entry), columns are
/// degrees 0..nmax; zero cells are blank.  Every row has the same field
/// count, so the output is a rectangular tab-separated table.
std::string table_to_tsv(const FiltrationTable& t);

std::string tor_to_json(const TriGradedDims& t);
std::string pages_to_json(const SpectralSequencePages& ss);

std::string hurwitz_to_json(const HurwitzReport& rep);
std::string hurwitz_to_tsv(const HurwitzReport& rep);

std::string stats_to_json(const WeightStatistic& ws, bool decimal);
std::string stats_to_tsv(const WeightStatistic& ws, bool decimal);

std::string profile_to_json(const NicholsProfile& p);
std::string profile_to_tsv(const NicholsProfile& p);

} // namespace qsh
