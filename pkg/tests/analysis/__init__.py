# Analysis tests
