def format_pair(key, value):
    label = str(key).strip()
    shown = str(value)
    return label + ' = ' + shown

def grid_cells(rows):
    width = 4 * 3
    cells = []
    for r in range(rows):
        cells.append(r * width)
    return cells
# probe: grid_cells(3)
