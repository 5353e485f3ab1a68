#ifndef KANCAT_IO_HPP_
#define KANCAT_IO_HPP_

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kancat/kan.hpp"
#include "kancat/mixed.hpp"
#include "kancat/rewrite.hpp"

namespace kancat {

  // Polynomial syntax:
  //   poly    := ['+'|'-'] term {('+'|'-') term} ['=' poly]
  //   term    := [coef ['*']] product | coef
  //   coef    := INT ['/' INT]
  //   product := factor {'*' factor}
  //   factor  := NAME ['^' INT] | '1(' OBJECT ')'
  // A bare coefficient multiplies an identity; its object is taken from the
  // other terms, or from the quiver when it has a single object. "P = Q"
  // means P - Q. Errors carry a location relative to `at`.
  PathPolynomial parse_polynomial(std::string_view      text,
                                  OrderPtr const&       order,
                                  SourceLocation        at = {1, 1});

  // As above, with tagged products "A|p" and "A|1".
  TaggedPolynomial parse_tagged_polynomial(std::string_view      text,
                                           TaggedOrderPtr const& order,
                                           SourceLocation        at = {1, 1});

  // A line-oriented file with sections
  //   [objects]    names separated by spaces or commas
  //   [arrows]     name : SRC -> TGT
  //   [order]      deglex a < b < c   (or a > b > ..., or bare deglex)
  //   [relations]  one polynomial per line
  //   [gamma]      "objects A B" and arrow lines
  //   [fmap]       A -> B   and   q -> polynomial
  //   [tagged]     one tagged polynomial per line (completed bases only)
  //   [status]     complete | candidate
  //   [provenance] key = value
  // '#' starts a comment. Unknown sections are rejected.
  struct Presentation {
    std::shared_ptr<Quiver const>      delta;
    OrderPtr                           order;
    std::vector<PathPolynomial>        relations;
    std::shared_ptr<Quiver const>      gamma;  // null without [gamma]
    std::vector<ObjectId>              f_obj;
    std::vector<PathPolynomial>        f_arr;
    TaggedOrderPtr                     tagged_order;  // null without [gamma]
    std::vector<TaggedPolynomial>      tagged;
    std::optional<Status>              status;
    std::map<std::string, std::string> provenance;

    bool has_gamma() const noexcept {
      return gamma != nullptr;
    }
    KanPresentation kan() const;       // InvalidPresentation without [gamma]
    RewriteSystem   system() const;    // the relations, status Candidate
  };

  // Throws SyntaxError or SemanticError with a location.
  Presentation parse_presentation(std::string_view text);
  std::string  print_presentation(Presentation const& p);
  bool         same_presentation(Presentation const& a, Presentation const& b);

  // A completed system as a presentation with [status] and [provenance].
  std::string serialize_basis(RewriteSystem const&                      sys,
                              std::map<std::string, std::string> const& provenance = {});
  std::string serialize_basis(MixedSystem const&                        sys,
                              Presentation const&                       source,
                              std::map<std::string, std::string> const& provenance = {});

  // Rebuilds the system from a basis file. A claimed Complete status is
  // re-verified and rejected with SemanticError when it does not hold.
  RewriteSystem load_basis(Presentation const& p);
  MixedSystem   load_mixed_basis(Presentation const& p);

}  // namespace kancat

#endif  // KANCAT_IO_HPP_
