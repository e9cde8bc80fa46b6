"""Walk through the three effect measures on a single parameterization.

The confounder C is unobserved; only the proxy D is seen.  The true effect
standardizes over C, the observed effect standardizes over D, and the crude
effect ignores confounding entirely.
"""

from confounder_lab import (
    ProxyParams,
    derived_conditionals,
    posterior_c,
    posterior_c_sigmoid,
    summarize,
    validate,
)

params = ProxyParams(
    p_c=0.3,                    # P(C=c): 30% of the population carries the risk factor
    p_d_given=(0.85, 0.15),     # D detects C with 85% sensitivity / 85% specificity
    p_a_given=(0.65, 0.35),     # exposure to C raises the treatment rate
    mu=((0.20, 0.45),           # E[Y | a-bar, c-bar], E[Y | a-bar, c]
        (0.35, 0.80)),          # E[Y | a,     c-bar], E[Y | a,     c]
)
validate(params)

print("Posterior of the confounder given what we can observe:")
for a in (1, 0):
    for d in (1, 0):
        direct = posterior_c(params, a, d)
        sigmoid = posterior_c_sigmoid(params, a, d)
        print(f"  P(c | A={a}, D={d}) = {direct:.6f}   (log-odds route: {sigmoid:.6f})")

dc = derived_conditionals(params)
print("\nObservable conditional means E[Y|A,D]:")
for a in (1, 0):
    print(f"  arm A={a}: E[Y|A,d] = {dc.e_y_given_ad[a][1]:.6f}, E[Y|A,d-bar] = {dc.e_y_given_ad[a][0]:.6f}")

s = summarize(params)
print("\nEffect measures:")
print(f"  rd_true  = {s.rd_true:+.6f}   (standardized over the unobserved C)")
print(f"  rd_obs   = {s.rd_obs:+.6f}   (standardized over the proxy D)")
print(f"  rd_crude = {s.rd_crude:+.6f}   (no adjustment)")
print(f"  interventional means: E[Y_a] = {s.e_y_do.a:.6f}, E[Y_a-bar] = {s.e_y_do.a_bar:.6f}")
print(f"  observable stand-ins: S_a    = {s.s.a:.6f}, S_a-bar    = {s.s.a_bar:.6f}")

inside = min(s.rd_true, s.rd_crude) <= s.rd_obs <= max(s.rd_true, s.rd_crude)
print(f"\nHere rd_obs lies between rd_true and rd_crude: {inside}")
print("Adjusting for the proxy, even an imperfect one, moved the estimate toward the truth.")
