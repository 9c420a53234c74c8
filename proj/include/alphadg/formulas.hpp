#pragma once

namespace alphadg {

// Closed-form A_alpha spectral radii. Each function validates its inputs and
// throws InvalidInput on a range violation.

// lambda_alpha(K(n,k,m)), 1 <= k <= n-2, 1 <= m <= n-k-1, 0 <= alpha < 1.
double lambda_knkm(int n, int k, int m, double alpha);

// Left-hand side of the quadratic whose largest root is lambda_knkm:
// x^2 - (an + n - am - 2)x + (an^2 - an - 2anm - m^2 + akm + am + am^2 - n + mn + 1 - km).
double knkm_quadratic(double x, int n, int k, int m, double alpha);

// Second largest lambda_alpha over strongly connected digraphs on n >= 3
// vertices, attained by K(n,n-2,1) (complete digraph minus one arc).
double second_max_radius(int n, double alpha);

// Maximum lambda_alpha over strongly connected digraphs with vertex
// connectivity k, in the two-case closed form (alpha = 0 and alpha > 0).
double vertex_connectivity_max_radius(int n, int k, double alpha);

enum class MExtreme { m_one, m_max, tie };

struct MComparison {
  MExtreme verdict;
  double at_m_one;  // lambda_knkm(n,k,1,alpha)
  double at_m_max;  // lambda_knkm(n,k,n-k-1,alpha)
};

// Which end of 1 <= m <= n-k-1 maximises lambda_knkm; differences up to 1e-9
// count as a tie.
MComparison compare_m_extremes(int n, int k, double alpha);

const char* to_string(MExtreme v);

}  // namespace alphadg
