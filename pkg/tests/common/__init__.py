# Common model tests
