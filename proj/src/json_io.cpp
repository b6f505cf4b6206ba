namespace dp4 { }
