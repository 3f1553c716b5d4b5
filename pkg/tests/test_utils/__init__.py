# Utility tests
