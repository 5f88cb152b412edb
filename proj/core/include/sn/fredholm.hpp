#pragma once

#include <vector>

#include "sn/action.hpp"
#include "sn/element.hpp"

namespace sn {

/// Truncation controls. A negative cap selects 4 * support_degree + 8. The
/// window actually used is at least support_degree + 1 (3 * support_degree for
/// n = 1).
struct Stabilization {
  int window = 3;
  int cap = -1;
};

int default_cap(const Element& a);

struct KernelResult {
  int dim = 0;
  /// Box size D at which `window` consecutive dimensions agreed.
  int stabilized_at = 0;
  /// Filled on request: a basis of the kernel inside the final box.
  std::vector<PolyElement> basis;
};

/// Dimensions of ker(a) restricted to the cubes {alpha <= D}, D = 0, 1, ...,
/// until they settle. Throws NotStabilized past the cap.
KernelResult truncated_kernel(const Element& a, Stabilization opts = {}, bool want_basis = false);
int kernel_dim(const Element& a, Stabilization opts = {});

struct IndexReport {
  int ker = 0;
  int coker = 0;
  int index = 0;
  int stabilized_at = 0;
};

/// Kernel by truncation; cokernel by the codimension of the image in each box.
/// ker(involution(a)) on P_n only bounds the cokernel from below: for
/// a = x^2 + 1 - E(0,0) it is 1 while the cokernel is 2.
IndexReport index(const Element& a, Stabilization opts = {});

/// Cokernel dimension from ranks of a(box(D + m)) with m the support degree,
/// the cokernel half of `index`.
int direct_coker_dim(const Element& a, Stabilization opts = {});

/// index(a + f) == index(a). f must lie in F_n.
bool perturb_invariance_check(const Element& a, const Element& f, Stabilization opts = {});

/// For index(a) = 0: an f in F_n mapping the kernel onto monomial
/// representatives of the cokernel, so that a + f is bijective on P_n.
Element fredholm_correction(const Element& a, Stabilization opts = {});

/// index(1 + a_i) where a_i is the C{i}-component of u - 1 (u - 1 in a_{n,n-1}).
int ind_i(const Element& u, int i, Stabilization opts = {});
std::vector<int> ind_vector(const Element& u, Stabilization opts = {});

}  // namespace sn
