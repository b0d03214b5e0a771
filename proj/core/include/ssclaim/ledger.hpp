#pragma once

namespace ssclaim {

struct LedgerOptions {
    bool invest_before_70 = false;
    bool cola_on = false;
};

/// Year-by-year accumulation of the early scenario; used to cross-check the
/// closed-form totals. Benefits are paid as annual lump sums at year end.
///
/// Before 70, each year's payment is either kept or deposited into a
/// portfolio that compounds yearly by (1+r). With COLAs the deposits are
/// credited at the first-year level S_K^C and the balance is indexed by
/// (1+q) on top of the market growth, which is the accounting behind
/// market_sum_at_70_cola. After 70 the portfolio keeps compounding by (1+r)
/// and payments (S_K, growing by (1+q) with COLAs) are kept.
///
/// Returns the portfolio value plus the kept payments at age 70+n.
/// K must be an integer in [1, 8] and n an integer >= 0.
double simulate_ledger(double K, double n, double p, double q, double r, double S0,
                       LedgerOptions options);

}  // namespace ssclaim
