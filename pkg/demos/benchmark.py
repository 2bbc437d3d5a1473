"""Envelope timing for the ROBDD and set-of-models engines.

Run: python3 demos/benchmark.py [reps]

The set engines give up ('-') once they would hold more models
than the default budget allows.
"""
import sys

from affenv.bench import format_records, run_bench


reps = int(sys.argv[1]) if len(sys.argv) > 1 else 20
records = run_bench([12, 15, 18, 21, 24], pr=10, reps=reps, seed=0,
                    engines=['robdd', 'models-fixpoint', 'models-incremental'])
print(format_records(records, seed=0, sep='\t'), end='')
