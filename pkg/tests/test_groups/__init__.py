# Group membership and generator tests
