def percent_of(part, whole):
    if whole == 0:
        return '0%'
    share = part * 100 // whole
    return str(share) + '%'
def nonempty_rows(rows):
    out = [len(row) for row in rows if row]
    return out
