# Quantum postulate tests
