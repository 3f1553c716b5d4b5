# Tensor product tests
