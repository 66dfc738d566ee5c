# Design tests
