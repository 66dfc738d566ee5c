# Formatter tests
