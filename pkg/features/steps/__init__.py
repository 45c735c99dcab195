"""
Step definitions package.

One module per feature file; behave loads every module in this directory.
"""
