# Core tests