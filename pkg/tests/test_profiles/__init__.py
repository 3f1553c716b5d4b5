# Profile loading tests
