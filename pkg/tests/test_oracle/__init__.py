# Oracle backend tests
