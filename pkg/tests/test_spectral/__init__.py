# Spectral solver tests
