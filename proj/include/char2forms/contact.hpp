#pragma once

#include <string>
#include <vector>

#include "char2forms/matrix.hpp"
#include "char2forms/super.hpp"

namespace char2forms {

/// A linear 1-form dx_0 + sum B_ij x_i dx_j with a parity assignment for
/// x_0 and for the n remaining variables. Mixed variable parities require
/// the even block first; an even x_0 with mixed variables requires an even
/// (block-diagonal) B, an odd x_0 requires an odd (block-off-diagonal) B.
struct OneFormSpec {
  Parity x0 = Parity::even;
  std::vector<Parity> var_parities;
  Matrix b;

  int n() const { return static_cast<int>(var_parities.size()); }
};

enum class ContactKind { even_vars, odd_vars, mixed, pericontact };

struct ContactVerdict {
  bool contact = false;
  ContactKind kind = ContactKind::even_vars;
  /// Half-rank r of the decisive block(s); for the pericontact case the
  /// rank of D + C^T.
  int r = 0;
  /// Canonical display for contact forms, empty otherwise.
  std::string canonical_expression;
};

ContactVerdict is_contact(const OneFormSpec& spec);

/// The canonical display of a contact form; DomainError when the form is
/// not contact.
std::string canonical_contact_expression(const OneFormSpec& spec);

}  // namespace char2forms
