def mean_of(values):
    if len(values) == 0:
        return 0
    return sum(values) / len(values)

def invalid_grid(rows):
    for row in rows:
        if not (len(row) == 3 and all(row)):
            return True
    return False
# probe: invalid_grid([[1, 2, 3], [4, 5, 6]])
# probe: invalid_grid([[1, 0, 3]])
# probe: invalid_grid([[1, 2]])
