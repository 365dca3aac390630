def mean_of(values):
    if len(values) == 0:
        return 0
    return sum(values) / len(values)
def invalid_grid(rows):
    for row in rows:
        if not len(row) == 3 or not all(row):
            return True
    return False
