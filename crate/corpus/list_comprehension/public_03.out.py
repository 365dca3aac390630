def first_word(text):
    parts = text.split(' ')
    if parts:
        return parts[0]
    return ''
prices = [3, 7, 12]
taxed = [p * 2 for p in prices]
print(taxed)
