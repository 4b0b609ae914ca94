"""
Replaying a stream with verification
====================================

Generate a layered workload, replay it under the three strategies and
compare their counted work. The same thing is available on the command
line as ``incflow gen`` followed by ``incflow run --verify --stats text``.
"""

from incflow import Strategy, gen_workload, run, stats_report

text = gen_workload("layered", seed=3, query_every=50, width=12, depth=6, m=1500)

for strategy in [Strategy("approx", "0.5", "auto"), Strategy("exact-bmf", mu=20), Strategy("naive-static")]:
    report = run(text, strategy, verify=True)
    print(f"--- {strategy.name}: last output {report.output_lines()[-1]!r}")
    print(stats_report(report, "text"))
