def percent_of(part, whole):
    if whole == 0:
        return '0%'
    share = part * 100 // whole
    return str(share) + '%'

def nonempty_rows(rows):
    out = []
    for row in rows:
        if row:
            out.append(len(row))
    return out
# probe: nonempty_rows([[1], [], [2, 3]])
