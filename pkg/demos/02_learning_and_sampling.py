"""Learning CPTs from records and classifying with naive Bayes.

Run from the repository root:  python3 demos/02_learning_and_sampling.py
"""

from curriculum_bn import (
    RecordSet,
    build_default_model,
    forward_sample,
    mle_fit,
    naive_bayes_predict,
    naive_bayes_train,
    posterior_marginal,
    synthetic_cohort_csv,
)

net = build_default_model()

print("=== ancestral sampling ===")
cohort = forward_sample(net, 20_000, seed=2024)
for state in ("A", "B", "C"):
    freq = cohort.column("AG").count(state) / len(cohort)
    print(f"empirical P(AG={state}) = {freq:.4f}  (model: "
          f"{posterior_marginal(net, {}, 'AG')[state]:.2f})")

print("\n=== refitting the model from its own samples ===")
fitted = mle_fit(net.structure, cohort, smoothing=1.0)
row = fitted.cpts["RecL"].rows[net.parent_config_index("RecL", {"G": "A", "Pub": "yes"})]
want = net.cpts["RecL"].rows[net.parent_config_index("RecL", {"G": "A", "Pub": "yes"})]
print(f"P(RecL | G=A, Pub=yes): fitted {row[0]:.4f} vs model {want[0]:.4f}")

print("\n=== the bundled frozen cohort ===")
frozen = RecordSet.from_csv(synthetic_cohort_csv())
print(f"{len(frozen)} records, columns: {', '.join(frozen.columns)}")

print("\n=== naive Bayes: predicting the letter from background only ===")
attrs = ["AG", "RBG", "Pub", "A"]
model = naive_bayes_train("RecL", attrs, net.variables, frozen, smoothing=1.0)
for profile in [
    {"AG": "A", "RBG": "yes", "Pub": "yes", "A": "high"},
    {"AG": "C", "RBG": "no", "Pub": "no", "A": "low"},
]:
    label, dist = naive_bayes_predict(model, profile)
    print(f"{profile} -> {label}  {dict((s, round(float(p), 4)) for s, p in dist.as_mapping().items())}")
