def pick_larger(a, b):
    if a >= b:
        return a
    return b

def corners(grid):
    top = []
    for c in range(2):
        top.append(grid[0][c])
    bottom = []
    for c in range(2):
        bottom.append(grid[1][c])
    return top, bottom
# probe: corners([[1, 2], [3, 4]])
