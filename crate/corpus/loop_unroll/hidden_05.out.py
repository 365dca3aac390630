def pick_larger(a, b):
    if a >= b:
        return a
    return b
def corners(grid):
    top = []
    top.append(grid[0][0])
    top.append(grid[0][1])
    bottom = []
    bottom.append(grid[1][0])
    bottom.append(grid[1][1])
    return top, bottom
