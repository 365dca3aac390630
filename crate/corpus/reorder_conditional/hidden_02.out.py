def count_blank(lines):
    blank = 0
    filled = 0
    for line in lines:
        if line.strip():
            filled += 1
        else:
            blank += 1
    return blank, filled
