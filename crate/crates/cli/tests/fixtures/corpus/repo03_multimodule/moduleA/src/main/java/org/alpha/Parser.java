package org.alpha;

public class Parser {
    public Node parse(String input) {
        return new Node(tokenize(input));
    }

    public String[] tokenize(String input) {
        return input.split(" ");
    }
}
